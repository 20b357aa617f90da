#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "antiatom/semigroup.hpp"
#include "antiatom/void_poset.hpp"

namespace antiatom {

/// GPF(S): vertices PF(S) \ {F(S)}, an edge P - Q iff P + Q - F(S) in S.
/// Loops (2P - F in S) are kept on the diagonal and do not affect
/// connectivity. kappa() of the empty graph is 0.
class PFGraph {
 public:
  PFGraph() = default;
  explicit PFGraph(const NumericalSemigroup& s);

  const std::vector<Element>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i * size() + j] != 0; }
  bool has_loop(std::size_t i) const { return adjacent(i, i); }
  /// Component labels 0..kappa-1, numbered in order of each component's
  /// smallest vertex.
  std::size_t component_of(std::size_t i) const { return component_id_[i]; }
  std::size_t kappa() const { return kappa_; }

  /// Non-loop edges (p, q) with p < q, sorted.
  std::vector<std::pair<Element, Element>> edges() const;
  std::vector<Element> loops() const;
  std::vector<std::vector<Element>> components() const;

 private:
  std::vector<Element> vertices_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::size_t> component_id_;
  std::size_t kappa_ = 0;
};

PFGraph build_gpf(const NumericalSemigroup& s);

/// (p, x, y) with p in PF(S) \ {F}, x and y in M(S), p + x + y = F(S).
struct FrobeniusTriangle {
  Element p;
  Element x;
  Element y;

  friend auto operator<=>(const FrobeniusTriangle&, const FrobeniusTriangle&) = default;
};

/// Tr(S), sorted lexicographically; (p, x, y) and (p, y, x) both appear when
/// x != y.
std::vector<FrobeniusTriangle> frobenius_triangles(const NumericalSemigroup& s);
/// Tr_P(S).
std::vector<FrobeniusTriangle> triangles_for(const NumericalSemigroup& s, Element p);

/// I satisfies (p, x, y) when p, x are in I and F - y is not.
bool ideal_satisfies(const VoidPoset& poset, const OrderIdeal& ideal,
                     const FrobeniusTriangle& triangle);

/// No P1, P2 in PF(S) with P1 != F and P1 - P2 in M(S).
bool is_triangle_free(const NumericalSemigroup& s);

/// P(S) == 2^kappa(S).
bool is_p_minimal(const NumericalSemigroup& s, std::uint64_t computed_p);

}  // namespace antiatom
