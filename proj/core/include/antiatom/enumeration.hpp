#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "antiatom/semigroup.hpp"

namespace antiatom {

enum class Method {
  brute,
  characterization,
  alg1,
  alg1_recursive,
};

std::string_view to_string(Method m);
/// Accepts the long names above and the short forms brute, char, alg1, rec.
std::optional<Method> parse_method(std::string_view name);

#ifdef NDEBUG
inline constexpr bool kValidateByDefault = false;
#else
inline constexpr bool kValidateByDefault = true;
#endif

struct EnumerationOptions {
  /// Largest |M(S)| accepted by the subset-based methods (brute,
  /// characterization), which walk all 2^|M| masks.
  std::size_t subset_limit = 30;
  /// Largest accepted prod_P (1 + |C_P|) for the Frobenius-triangle methods,
  /// where C_P holds the triangles with first entry P plus the F - P option.
  std::uint64_t choice_budget = 1'000'000'000;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;
  /// Recheck every result with the definitional atom monoid; a mismatch
  /// throws ValidationFailure naming the offending set.
  bool validate = kValidateByDefault;
};

/// The numerical sets T with A(T) = S, each stored as its extra elements
/// T \ S (a subset of M(S)), sorted ascending; the list of extras is sorted
/// lexicographically, so the empty extra (T = S) always comes first.
struct AssociatedSetCollection {
  NumericalSemigroup base;
  Method method = Method::alg1_recursive;
  std::vector<std::vector<Element>> extras;

  std::size_t count() const { return extras.size(); }
  NumericalSet numerical_set(std::size_t i) const;
};

/// Tests every subset I of M(S) with the definitional atom monoid.
AssociatedSetCollection associated_sets_bruteforce(const NumericalSemigroup& s,
                                                   const EnumerationOptions& options = {});
/// Filters order ideals by the pseudo-Frobenius condition: each P in I must
/// have 2P outside S, F - P in I, or a Frobenius triangle satisfied by I.
AssociatedSetCollection associated_sets_by_characterization(
    const NumericalSemigroup& s, const EnumerationOptions& options = {});
/// Loops over every subset A of PF(S) \ {F} and every choice tuple in
/// prod_{P in A} C_P, building the forced-in and forced-out sets from scratch.
AssociatedSetCollection associated_sets_alg1(const NumericalSemigroup& s,
                                             const EnumerationOptions& options = {});
/// Same output as associated_sets_alg1; decides one pseudo-Frobenius number at
/// a time and abandons a branch as soon as forced-in meets forced-out.
AssociatedSetCollection associated_sets_recursive(const NumericalSemigroup& s,
                                                  const EnumerationOptions& options = {});

AssociatedSetCollection associated_sets(const NumericalSemigroup& s, Method method,
                                        const EnumerationOptions& options = {});

/// P(S). N0 counts 1.
std::uint64_t count_P(const NumericalSemigroup& s, Method method = Method::alg1_recursive,
                      const EnumerationOptions& options = {});

/// prod_P (1 + |C_P|), saturating at UINT64_MAX.
std::uint64_t choice_product_estimate(const NumericalSemigroup& s);

inline constexpr Element kCensusMaxFrobenius = 22;

struct CensusResult {
  Element frobenius = 0;
  /// Keyed by A(T), ascending in NumericalSemigroup order.
  std::vector<std::pair<NumericalSemigroup, std::uint64_t>> counts;

  std::uint64_t total() const;
  std::uint64_t expected_total() const { return std::uint64_t{1} << (frobenius - 1); }
  bool identity_holds() const { return total() == expected_total(); }
};

/// Scans all 2^(F-1) numerical sets with Frobenius number F and groups them by
/// atom monoid. Throws InvalidInput for F < 1 and LimitExceeded for
/// F > kCensusMaxFrobenius.
CensusResult census_by_frobenius(Element frobenius, unsigned threads = 1);

}  // namespace antiatom
