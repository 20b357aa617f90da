#include "antiatom/void_poset.hpp"

#include <algorithm>
#include <string>

#include "antiatom/error.hpp"
#include "antiatom/pf_structure.hpp"

namespace antiatom {

VoidPoset::VoidPoset(const NumericalSemigroup& s)
    : frobenius_(s.frobenius()), elements_(s.void_elements()) {
  const std::size_t n = elements_.size();
  up_.assign(n, IndexSet(n));
  down_.assign(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (s.contains(elements_[j] - elements_[i])) {
        up_[i].set(j);
        down_[j].set(i);
      }
    }
  }
}

std::optional<std::size_t> VoidPoset::index_of(Element value) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  if (it == elements_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

IndexSet VoidPoset::up_closure(const IndexSet& seeds) const {
  IndexSet out(size());
  for (auto i = seeds.find_first(); i != IndexSet::npos; i = seeds.find_next(i)) out |= up_[i];
  return out;
}

IndexSet VoidPoset::down_closure(const IndexSet& seeds) const {
  IndexSet out(size());
  for (auto i = seeds.find_first(); i != IndexSet::npos; i = seeds.find_next(i)) out |= down_[i];
  return out;
}

IndexSet VoidPoset::conjugate(const IndexSet& set) const {
  IndexSet out(size());
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
    out.set(conjugate(i));
  }
  return out;
}

bool VoidPoset::is_order_ideal(const IndexSet& set) const {
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
    if (!up_[i].is_subset_of(set)) return false;
  }
  return true;
}

IndexSet VoidPoset::mask_of(std::span<const Element> values) const {
  IndexSet out(size());
  for (Element v : values) {
    auto i = index_of(v);
    if (!i) throw InvalidInput(std::to_string(v) + " is not in the void");
    out.set(*i);
  }
  return out;
}

std::vector<Element> VoidPoset::values_of(const IndexSet& set) const {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
    out.push_back(elements_[i]);
  }
  return out;
}

std::vector<std::size_t> VoidPoset::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> VoidPoset::minimal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<Element, Element>> VoidPoset::hasse_edges() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    IndexSet above = up_[i];
    above.reset(i);
    for (auto j = above.find_first(); j != IndexSet::npos; j = above.find_next(j)) {
      // j covers i unless some k strictly between them.
      IndexSet between = above & down_[j];
      between.reset(j);
      if (between.none()) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

VoidPoset build_void_poset(const NumericalSemigroup& s) { return VoidPoset(s); }

std::vector<Element> maximal_elements(const VoidPoset& poset) {
  std::vector<Element> out;
  for (auto i : poset.maximal_indices()) out.push_back(poset.value(i));
  return out;
}

std::vector<Element> minimal_elements(const VoidPoset& poset) {
  std::vector<Element> out;
  for (auto i : poset.minimal_indices()) out.push_back(poset.value(i));
  return out;
}

void enumerate_order_ideals(const VoidPoset& poset,
                            const std::function<void(const OrderIdeal&)>& visit,
                            std::size_t limit) {
  const std::size_t n = poset.size();
  if (n > limit || n >= 64) {
    throw LimitExceeded("void poset has " + std::to_string(n) +
                        " elements, above the bitmask enumeration limit of " +
                        std::to_string(limit) + "; use the DFS enumerator");
  }
  std::vector<std::uint64_t> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = poset.up_set(i).to_ulong();

  const std::uint64_t end = std::uint64_t{1} << n;
  OrderIdeal ideal{IndexSet(n)};
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest != 0 && closed; rest &= rest - 1) {
      auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
      closed = (up[i] & ~mask) == 0;
    }
    if (!closed) continue;
    ideal.mask = IndexSet(n, mask);
    visit(ideal);
  }
}

std::vector<OrderIdeal> order_ideals(const VoidPoset& poset, std::size_t limit) {
  std::vector<OrderIdeal> out;
  enumerate_order_ideals(poset, [&](const OrderIdeal& ideal) { out.push_back(ideal); }, limit);
  return out;
}

namespace {

void order_ideal_dfs(const VoidPoset& poset, const IndexSet& domain, const IndexSet& undecided,
                     const IndexSet& chosen,
                     const std::function<void(const IndexSet&)>& visit) {
  auto i = undecided.find_first();
  if (i == IndexSet::npos) {
    visit(chosen);
    return;
  }
  order_ideal_dfs(poset, domain, undecided - poset.down_set(i), chosen, visit);
  order_ideal_dfs(poset, domain, undecided - poset.up_set(i),
                  chosen | (poset.up_set(i) & domain), visit);
}

}  // namespace

void for_each_order_ideal_dfs(const VoidPoset& poset, const IndexSet& domain,
                              const std::function<void(const IndexSet&)>& visit) {
  order_ideal_dfs(poset, domain, domain, IndexSet(poset.size()), visit);
}

bool is_self_dual(const VoidPoset& poset, const OrderIdeal& ideal) {
  for (auto i : poset.maximal_indices()) {
    if (ideal.mask.test(i) && !ideal.mask.test(poset.conjugate(i))) return false;
  }
  return true;
}

std::vector<OrderIdeal> enumerate_self_dual_ideals(const VoidPoset& poset, const PFGraph& graph) {
  const auto components = graph.components();
  std::vector<IndexSet> component_down;
  for (const auto& component : components) {
    component_down.push_back(poset.down_closure(poset.mask_of(component)));
  }
  std::vector<OrderIdeal> out;
  const std::uint64_t end = std::uint64_t{1} << components.size();
  for (std::uint64_t choice = 0; choice < end; ++choice) {
    IndexSet mask(poset.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
      if ((choice >> c) & 1U) mask |= component_down[c];
    }
    out.push_back(OrderIdeal{std::move(mask)});
  }
  return out;
}

std::vector<OrderIdeal> enumerate_self_dual_ideals(const VoidPoset& poset,
                                                   const NumericalSemigroup& s) {
  return enumerate_self_dual_ideals(poset, build_gpf(s));
}

}  // namespace antiatom
