#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace antiatom {

using Element = std::int64_t;

/// A cofinite subset of the nonnegative integers that contains 0.
///
/// Stored as a dense membership bitset over [0, frobenius]; every integer
/// above the Frobenius number is a member. The empty gap set is N0 itself,
/// with Frobenius number -1 and genus 0.
class NumericalSet {
 public:
  /// N0.
  NumericalSet() = default;

  /// Throws InvalidInput if any gap is <= 0. Duplicates are ignored.
  static NumericalSet from_gaps(std::span<const Element> gaps);

  /// Builds a set from membership flags over [0, flags.size()); everything at
  /// or beyond flags.size() is a member. flags[0] must be true.
  static NumericalSet from_membership(const boost::dynamic_bitset<>& flags);

  bool contains(Element x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return members_.test(static_cast<std::size_t>(x));
  }

  Element frobenius() const { return frobenius_; }
  std::size_t genus() const { return genus_; }
  bool is_natural_numbers() const { return frobenius_ < 0; }

  /// Sorted ascending.
  std::vector<Element> gaps() const;
  /// Members in [0, frobenius], sorted ascending.
  std::vector<Element> small_elements() const;

  /// Bits 0..frobenius; bit set means member.
  const boost::dynamic_bitset<>& membership() const { return members_; }

  friend bool operator==(const NumericalSet& a, const NumericalSet& b) {
    return a.frobenius_ == b.frobenius_ && a.members_ == b.members_;
  }

  /// Total order: by Frobenius number, then by gap sequence.
  friend bool operator<(const NumericalSet& a, const NumericalSet& b);

 private:
  Element frobenius_ = -1;
  std::size_t genus_ = 0;
  boost::dynamic_bitset<> members_;
};

NumericalSet set_from_gaps(std::span<const Element> gaps);
inline NumericalSet set_from_gaps(std::initializer_list<Element> gaps) {
  return NumericalSet::from_gaps(std::span<const Element>(gaps.begin(), gaps.size()));
}

/// T* = {x : F(T) - x not in T}. Throws InvalidInput for N0.
NumericalSet dual(const NumericalSet& set);

/// {x : x + T within T}, computed definitionally. The result is returned as a
/// plain NumericalSet; wrap it with NumericalSemigroup::from_set (or call
/// atom_monoid in semigroup.hpp) to get the cached invariants.
NumericalSet atom_monoid_set(const NumericalSet& set);

/// Word-sized A(T) for F(T) < 64: bit i of `members` is membership of i for
/// i <= frobenius. Returns the membership word of A(T) in the same layout.
std::uint64_t atom_monoid_mask(std::uint64_t members, unsigned frobenius);

}  // namespace antiatom
