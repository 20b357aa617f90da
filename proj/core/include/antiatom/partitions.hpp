#pragma once

#include <cstdint>
#include <vector>

#include "antiatom/enumeration.hpp"
#include "antiatom/numerical_set.hpp"
#include "antiatom/semigroup.hpp"

namespace antiatom {

/// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<Element> parts);

  const std::vector<Element>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  Element size() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Element> parts_;
};

Partition conjugate(const Partition& lambda);

/// The partition whose first-column hook lengths are the gaps of T: with gaps
/// h_1 < ... < h_g, part i is h_{g+1-i} - (g - i). N0 maps to the empty
/// partition.
Partition partition_from_set(const NumericalSet& set);
NumericalSet set_from_partition(const Partition& lambda);

/// All hook lengths arm + leg + 1, sorted descending.
std::vector<Element> hook_multiset(const Partition& lambda);
/// Distinct hook lengths, ascending.
std::vector<Element> hook_set(const Partition& lambda);

/// Number of partitions whose hook set is the gap set of S, obtained by
/// pushing every associated numerical set through the bijection. Each
/// partition's hook set is checked; a mismatch throws ValidationFailure.
std::uint64_t count_partitions_with_hookset(const NumericalSemigroup& s,
                                            Method method = Method::alg1_recursive,
                                            const EnumerationOptions& options = {});

}  // namespace antiatom
