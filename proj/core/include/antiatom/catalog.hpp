#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "antiatom/semigroup.hpp"

namespace antiatom {

enum class Family {
  nf,               // {0, F+1 ->}; params [F]
  ndf,              // {0} u {F - l : l in D} u {F+1 ->}; params [F, d1, ..., dk]
  five_multiples,   // {0, 5, 10, ..., 5(n-1), 5n ->}; params [n]
  interleaved_odd,  // {0, 2m ->} u {m + 2k : 0 <= k < n}, m = 2n + 1; params [n]
  med_example,      // <m, m(m+k-1)+k (1 <= k <= m-2), m(2m-1)+m-1>; params [m]
};

std::string_view to_string(Family f);
/// Accepts NF, NDF, five_multiples, interleaved_odd, med_example
/// (case-insensitive).
std::optional<Family> parse_family(std::string_view name);

struct FamilyInstance {
  Family name;
  std::vector<Element> params;
  NumericalSemigroup semigroup;
  /// Present only for families with a closed form (not NF / NDF).
  std::optional<std::uint64_t> predicted_P;
  std::optional<std::size_t> predicted_type;
};

/// Throws InvalidInput on parameter violations (wrong count, n < 1, m < 2,
/// F <= 2 max(D), ...).
FamilyInstance make_family(Family name, std::span<const Element> params);

/// Type 2 always gives P(S) = 2. Throws InvalidInput unless t(S) = 2.
std::uint64_t classify_type2(const NumericalSemigroup& s);

struct Type3Classification {
  /// PF(S) = {p, q, f}, p < q < f.
  Element p = 0;
  Element q = 0;
  Element f = 0;
  /// 1: p + q - f not in S.
  /// 2: p + q - f in S, q - p not in M(S).
  /// 3: p + q - f in S, q - p in M(S), f + p = 2q.
  /// 4: p + q - f in S, q - p in M(S), f + p != 2q.
  int case_number = 0;
  std::uint64_t predicted_P = 0;
  /// P(S) = 2^kappa(S), which for type 3 happens iff q - p is not in M(S).
  bool p_minimal = false;
};

/// Throws InvalidInput unless t(S) = 3.
Type3Classification classify_type3(const NumericalSemigroup& s);

/// P(S) for a triangle-free semigroup of maximal embedding dimension:
/// 2^((m-1)/2) for odd m, 2^((m-2)/2) for even m and odd F, 2^(m/2) when m
/// and F are both even. Throws InvalidInput naming the failed precondition.
std::uint64_t med_triangle_free_P(const NumericalSemigroup& s);

/// For x <= y in M(S): x precedes y in the void poset iff m(S) divides y - x.
bool void_order_is_congruence(const NumericalSemigroup& s);

bool has_maximal_embedding_dimension(const NumericalSemigroup& s);

}  // namespace antiatom
