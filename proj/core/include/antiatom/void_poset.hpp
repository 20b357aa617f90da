#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "antiatom/semigroup.hpp"

namespace antiatom {

/// A set of positions into VoidPoset::elements().
using IndexSet = boost::dynamic_bitset<>;

/// An upward-closed subset of the void poset, stored as a position mask.
struct OrderIdeal {
  IndexSet mask;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

class PFGraph;

/// The void M(S) ordered by x <= y iff y - x in S.
///
/// Positions follow the sorted element list, so the conjugate x -> F - x of
/// position i is position size() - 1 - i. The relation is stored densely as
/// one up-set and one down-set bitset per element (both include the element
/// itself).
class VoidPoset {
 public:
  explicit VoidPoset(const NumericalSemigroup& s);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Element>& elements() const { return elements_; }
  Element value(std::size_t i) const { return elements_[i]; }
  Element frobenius() const { return frobenius_; }
  std::optional<std::size_t> index_of(Element value) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  std::size_t conjugate(std::size_t i) const { return elements_.size() - 1 - i; }

  const IndexSet& up_set(std::size_t i) const { return up_[i]; }
  const IndexSet& down_set(std::size_t i) const { return down_[i]; }

  IndexSet empty_set() const { return IndexSet(size()); }
  IndexSet full_set() const { return ~IndexSet(size()); }
  IndexSet up_closure(const IndexSet& seeds) const;
  IndexSet down_closure(const IndexSet& seeds) const;
  IndexSet conjugate(const IndexSet& set) const;
  bool is_order_ideal(const IndexSet& set) const;

  /// Throws InvalidInput if a value is not in the void.
  IndexSet mask_of(std::span<const Element> values) const;
  std::vector<Element> values_of(const IndexSet& set) const;

  std::vector<std::size_t> maximal_indices() const;
  std::vector<std::size_t> minimal_indices() const;

  /// Cover relations (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> hasse_edges() const;

 private:
  Element frobenius_;
  std::vector<Element> elements_;
  std::vector<IndexSet> up_;
  std::vector<IndexSet> down_;
};

VoidPoset build_void_poset(const NumericalSemigroup& s);

/// Equal to PF(S) \ {F(S)}.
std::vector<Element> maximal_elements(const VoidPoset& poset);
/// Conjugates of the maximal elements.
std::vector<Element> minimal_elements(const VoidPoset& poset);

inline constexpr std::size_t kDefaultIdealEnumerationLimit = 30;

/// Visits every order ideal exactly once, in ascending mask order (position 0
/// is the least significant bit). Throws LimitExceeded when the poset has more
/// than `limit` elements; use for_each_order_ideal_dfs instead.
void enumerate_order_ideals(const VoidPoset& poset,
                            const std::function<void(const OrderIdeal&)>& visit,
                            std::size_t limit = kDefaultIdealEnumerationLimit);
std::vector<OrderIdeal> order_ideals(const VoidPoset& poset,
                                     std::size_t limit = kDefaultIdealEnumerationLimit);

/// Visits every order ideal of the subposet induced on `domain` (positions
/// outside `domain` are never included). Branches on the lowest undecided
/// position: excluding it excludes its down-set, including it includes its
/// up-set. Cost is linear in the number of ideals times the poset size.
void for_each_order_ideal_dfs(const VoidPoset& poset, const IndexSet& domain,
                              const std::function<void(const IndexSet&)>& visit);

/// x in I implies F - x in I. For an order ideal it is enough to check the
/// maximal elements (pseudo-Frobenius numbers) that lie in I.
bool is_self_dual(const VoidPoset& poset, const OrderIdeal& ideal);

/// One self-dual ideal per union of connected components of GPF(S): the
/// down-closure of the chosen pseudo-Frobenius numbers. Ordered by the bitmask
/// of chosen components, components numbered by their smallest vertex.
std::vector<OrderIdeal> enumerate_self_dual_ideals(const VoidPoset& poset, const PFGraph& graph);
std::vector<OrderIdeal> enumerate_self_dual_ideals(const VoidPoset& poset,
                                                   const NumericalSemigroup& s);

}  // namespace antiatom
