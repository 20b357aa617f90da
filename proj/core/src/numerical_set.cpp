#include "antiatom/numerical_set.hpp"

#include <algorithm>
#include <string>

#include "antiatom/error.hpp"

namespace antiatom {

NumericalSet NumericalSet::from_gaps(std::span<const Element> gaps) {
  Element frobenius = -1;
  for (Element g : gaps) {
    if (g <= 0) {
      throw InvalidInput("gap " + std::to_string(g) + " is not a positive integer");
    }
    frobenius = std::max(frobenius, g);
  }
  boost::dynamic_bitset<> flags(static_cast<std::size_t>(frobenius + 1));
  flags.set();
  for (Element g : gaps) flags.reset(static_cast<std::size_t>(g));
  return from_membership(flags);
}

NumericalSet NumericalSet::from_membership(const boost::dynamic_bitset<>& flags) {
  if (!flags.empty() && !flags.test(0)) {
    throw InvalidInput("0 must belong to a numerical set");
  }
  NumericalSet set;
  std::size_t last_gap = flags.size();
  for (std::size_t i = flags.size(); i-- > 0;) {
    if (!flags.test(i)) {
      last_gap = i;
      break;
    }
  }
  if (last_gap == flags.size()) return set;
  set.frobenius_ = static_cast<Element>(last_gap);
  set.members_ = flags;
  set.members_.resize(last_gap + 1);
  set.genus_ = set.members_.size() - set.members_.count();
  return set;
}

std::vector<Element> NumericalSet::gaps() const {
  std::vector<Element> out;
  out.reserve(genus_);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_.test(i)) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> NumericalSet::small_elements() const {
  std::vector<Element> out;
  out.reserve(members_.count());
  for (auto i = members_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = members_.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool operator<(const NumericalSet& a, const NumericalSet& b) {
  if (a.frobenius_ != b.frobenius_) return a.frobenius_ < b.frobenius_;
  // Same length; the first differing position decides: the set that has a
  // gap there has the lexicographically smaller gap sequence.
  for (std::size_t i = 0; i < a.members_.size(); ++i) {
    bool am = a.members_.test(i);
    bool bm = b.members_.test(i);
    if (am != bm) return !am;
  }
  return false;
}

NumericalSet set_from_gaps(std::span<const Element> gaps) {
  return NumericalSet::from_gaps(gaps);
}

NumericalSet dual(const NumericalSet& set) {
  if (set.is_natural_numbers()) {
    throw InvalidInput("the dual of N0 is undefined (Frobenius number -1)");
  }
  const Element f = set.frobenius();
  boost::dynamic_bitset<> flags(static_cast<std::size_t>(f + 1));
  for (Element x = 0; x <= f; ++x) {
    if (!set.contains(f - x)) flags.set(static_cast<std::size_t>(x));
  }
  return NumericalSet::from_membership(flags);
}

namespace {

// x is in A(T) iff x in T and (T & [0, F - x]) + x lies inside T; sums past F
// are members automatically.
NumericalSet atom_monoid_small(const NumericalSet& set) {
  const auto f = static_cast<unsigned>(set.frobenius());
  const std::uint64_t atoms = atom_monoid_mask(set.membership().to_ulong(), f);
  return NumericalSet::from_membership(boost::dynamic_bitset<>(f + 1, atoms));
}

}  // namespace

std::uint64_t atom_monoid_mask(std::uint64_t members, unsigned frobenius) {
  const std::uint64_t full = frobenius >= 63 ? ~0ULL : ((1ULL << (frobenius + 1)) - 1);
  members &= full;
  std::uint64_t atoms = 1;
  for (unsigned x = 1; x <= frobenius; ++x) {
    if (!((members >> x) & 1ULL)) continue;
    if ((((members << x) & full) & ~members) == 0) atoms |= 1ULL << x;
  }
  return atoms;
}

NumericalSet atom_monoid_set(const NumericalSet& set) {
  if (set.is_natural_numbers()) return set;
  if (set.frobenius() < 64) return atom_monoid_small(set);
  const auto& members = set.membership();
  boost::dynamic_bitset<> flags(members.size());
  flags.set(0);
  for (auto x = members.find_next(0); x != boost::dynamic_bitset<>::npos;
       x = members.find_next(x)) {
    if ((members << x).is_subset_of(members)) flags.set(x);
  }
  return NumericalSet::from_membership(flags);
}

}  // namespace antiatom
