#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "antiatom/error.hpp"
#include "antiatom/numerical_set.hpp"

namespace antiatom {

/// Raised by NumericalSemigroup::from_set when a + b leaves the set.
class NotClosedError : public InvalidInput {
 public:
  NotClosedError(Element a, Element b);
  std::pair<Element, Element> witness() const { return {a_, b_}; }

 private:
  Element a_;
  Element b_;
};

enum class SymmetryClass {
  symmetric,
  pseudo_symmetric,
  almost_symmetric_other,
  none,
};

std::string_view to_string(SymmetryClass c);

struct Descriptors {
  Element frobenius = -1;
  std::size_t genus = 0;
  Element multiplicity = 1;
  std::size_t embedding_dimension = 1;
  std::vector<Element> min_generators;
};

/// A numerical set closed under addition.
///
/// Minimal generators, pseudo-Frobenius numbers and the void
/// M(S) = {a : a, F - a both gaps} are computed once at construction; the
/// object is immutable afterwards and safe to share read-only.
///
/// Conventions for N0 (F = -1): genus 0, multiplicity 1, generators {1},
/// empty PF (type 0), empty void, classified as symmetric.
class NumericalSemigroup {
 public:
  /// N0.
  NumericalSemigroup();

  /// All nonnegative integer combinations. Throws InvalidInput on an empty
  /// list, a nonpositive generator, or gcd != 1.
  static NumericalSemigroup from_generators(std::span<const Element> generators);
  static NumericalSemigroup from_generators(std::initializer_list<Element> generators) {
    return from_generators(std::span<const Element>(generators.begin(), generators.size()));
  }

  /// Throws NotClosedError with the lexicographically smallest witness (a, b),
  /// a <= b, when the set is not closed under addition.
  static NumericalSemigroup from_set(const NumericalSet& set);

  const NumericalSet& as_set() const { return set_; }
  bool contains(Element x) const { return set_.contains(x); }

  Element frobenius() const { return set_.frobenius(); }
  std::size_t genus() const { return set_.genus(); }
  std::vector<Element> gaps() const { return set_.gaps(); }
  Element multiplicity() const { return min_generators_.front(); }
  std::size_t embedding_dimension() const { return min_generators_.size(); }
  std::size_t type() const { return pseudo_frobenius_.size(); }

  const std::vector<Element>& min_generators() const { return min_generators_; }
  /// PF(S), sorted; F(S) is the last entry unless S = N0.
  const std::vector<Element>& pseudo_frobenius() const { return pseudo_frobenius_; }
  /// M(S), sorted.
  const std::vector<Element>& void_elements() const { return void_; }

  bool in_void(Element x) const;
  bool is_pseudo_frobenius(Element x) const;

  Descriptors descriptors() const;
  SymmetryClass symmetry() const;
  bool is_almost_symmetric() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.set_ == b.set_;
  }
  friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.set_ < b.set_;
  }

 private:
  explicit NumericalSemigroup(NumericalSet set);

  NumericalSet set_;
  std::vector<Element> min_generators_;
  std::vector<Element> pseudo_frobenius_;
  std::vector<Element> void_;
};

NumericalSemigroup semigroup_from_generators(std::span<const Element> generators);
NumericalSemigroup semigroup_from_set(const NumericalSet& set);

Descriptors descriptors(const NumericalSemigroup& s);

/// PF(S) by the definition: gaps P with P + s in S for every nonzero s in S,
/// s <= F. Slow; used to cross-check the generator-based computation.
std::vector<Element> pseudo_frobenius_definitional(const NumericalSemigroup& s);

/// A(T) as a semigroup.
NumericalSemigroup atom_monoid(const NumericalSet& set);

SymmetryClass classify_symmetry(const NumericalSemigroup& s);

}  // namespace antiatom
