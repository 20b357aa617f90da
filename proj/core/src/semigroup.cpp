#include "antiatom/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace antiatom {

NotClosedError::NotClosedError(Element a, Element b)
    : InvalidInput("set is not closed under addition: " + std::to_string(a) + " + " +
                   std::to_string(b) + " = " + std::to_string(a + b) + " is missing"),
      a_(a),
      b_(b) {}

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric:
      return "symmetric";
    case SymmetryClass::pseudo_symmetric:
      return "pseudo_symmetric";
    case SymmetryClass::almost_symmetric_other:
      return "almost_symmetric_other";
    case SymmetryClass::none:
      return "none";
  }
  return "none";
}

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(NumericalSet{}) {}

NumericalSemigroup::NumericalSemigroup(NumericalSet set) : set_(std::move(set)) {
  const Element f = set_.frobenius();

  // Every element above F + m is m plus an element above F, so minimal
  // generators live in (0, F + m].
  Element m = 1;
  while (!set_.contains(m)) ++m;
  for (Element x = m; x <= std::max<Element>(f, 0) + m; ++x) {
    if (!set_.contains(x)) continue;
    bool decomposable = std::any_of(min_generators_.begin(), min_generators_.end(),
                                    [&](Element g) { return set_.contains(x - g); });
    if (!decomposable) min_generators_.push_back(x);
  }

  for (Element p = 1; p <= f; ++p) {
    if (set_.contains(p)) continue;
    if (std::all_of(min_generators_.begin(), min_generators_.end(),
                    [&](Element g) { return set_.contains(p + g); })) {
      pseudo_frobenius_.push_back(p);
    }
  }

  for (Element a = 1; a < f; ++a) {
    if (!set_.contains(a) && !set_.contains(f - a)) void_.push_back(a);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Element> generators) {
  if (generators.empty()) throw InvalidInput("generator list is empty");
  Element g = 0;
  for (Element n : generators) {
    if (n <= 0) {
      throw InvalidInput("generator " + std::to_string(n) + " is not a positive integer");
    }
    g = std::gcd(g, n);
  }
  if (g != 1) {
    throw InvalidInput("generators have gcd " + std::to_string(g) +
                       "; the complement would be infinite");
  }

  // Apery set with respect to the smallest generator: shortest paths on the
  // residues mod m with one edge per generator.
  const Element m = *std::min_element(generators.begin(), generators.end());
  if (m == 1) return NumericalSemigroup{};
  constexpr Element kInf = std::numeric_limits<Element>::max();
  std::vector<Element> apery(static_cast<std::size_t>(m), kInf);
  using Entry = std::pair<Element, Element>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  apery[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [dist, residue] = queue.top();
    queue.pop();
    if (dist > apery[static_cast<std::size_t>(residue)]) continue;
    for (Element n : generators) {
      Element next = dist + n;
      auto r = static_cast<std::size_t>(next % m);
      if (next < apery[r]) {
        apery[r] = next;
        queue.emplace(next, static_cast<Element>(r));
      }
    }
  }

  const Element f = *std::max_element(apery.begin(), apery.end()) - m;
  boost::dynamic_bitset<> flags(static_cast<std::size_t>(f + 1));
  for (Element x = 0; x <= f; ++x) {
    if (x >= apery[static_cast<std::size_t>(x % m)]) flags.set(static_cast<std::size_t>(x));
  }
  return NumericalSemigroup(NumericalSet::from_membership(flags));
}

NumericalSemigroup NumericalSemigroup::from_set(const NumericalSet& set) {
  const auto& members = set.membership();
  for (auto a = members.find_next(0); a != boost::dynamic_bitset<>::npos;
       a = members.find_next(a)) {
    if ((members << a).is_subset_of(members)) continue;
    for (auto b = a; b < members.size(); b = members.find_next(b)) {
      if (!set.contains(static_cast<Element>(a + b))) {
        throw NotClosedError(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }
  return NumericalSemigroup(set);
}

bool NumericalSemigroup::in_void(Element x) const {
  return std::binary_search(void_.begin(), void_.end(), x);
}

bool NumericalSemigroup::is_pseudo_frobenius(Element x) const {
  return std::binary_search(pseudo_frobenius_.begin(), pseudo_frobenius_.end(), x);
}

Descriptors NumericalSemigroup::descriptors() const {
  return Descriptors{frobenius(), genus(), multiplicity(), embedding_dimension(),
                     min_generators_};
}

bool NumericalSemigroup::is_almost_symmetric() const {
  return static_cast<Element>(type()) ==
         2 * static_cast<Element>(genus()) - frobenius();
}

SymmetryClass NumericalSemigroup::symmetry() const {
  if (void_.empty()) return SymmetryClass::symmetric;
  if (void_.size() == 1 && frobenius() % 2 == 0 && void_.front() * 2 == frobenius()) {
    return SymmetryClass::pseudo_symmetric;
  }
  if (is_almost_symmetric()) return SymmetryClass::almost_symmetric_other;
  return SymmetryClass::none;
}

NumericalSemigroup semigroup_from_generators(std::span<const Element> generators) {
  return NumericalSemigroup::from_generators(generators);
}

NumericalSemigroup semigroup_from_set(const NumericalSet& set) {
  return NumericalSemigroup::from_set(set);
}

Descriptors descriptors(const NumericalSemigroup& s) { return s.descriptors(); }

std::vector<Element> pseudo_frobenius_definitional(const NumericalSemigroup& s) {
  std::vector<Element> out;
  const Element f = s.frobenius();
  for (Element p = 1; p <= f; ++p) {
    if (s.contains(p)) continue;
    bool ok = true;
    for (Element x = 1; x <= f && ok; ++x) {
      if (s.contains(x) && !s.contains(p + x)) ok = false;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

NumericalSemigroup atom_monoid(const NumericalSet& set) {
  return NumericalSemigroup::from_set(atom_monoid_set(set));
}

SymmetryClass classify_symmetry(const NumericalSemigroup& s) { return s.symmetry(); }

}  // namespace antiatom
