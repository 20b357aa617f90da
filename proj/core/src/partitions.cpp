#include "antiatom/partitions.hpp"

#include <algorithm>
#include <string>

#include "antiatom/error.hpp"

namespace antiatom {

Partition::Partition(std::vector<Element> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
  }
}

Element Partition::size() const {
  Element total = 0;
  for (Element p : parts_) total += p;
  return total;
}

Partition conjugate(const Partition& lambda) {
  std::vector<Element> out;
  if (lambda.length() == 0) return Partition{};
  const Element width = lambda.parts().front();
  for (Element j = 1; j <= width; ++j) {
    Element height = 0;
    for (Element p : lambda.parts()) {
      if (p >= j) ++height;
    }
    out.push_back(height);
  }
  return Partition(std::move(out));
}

Partition partition_from_set(const NumericalSet& set) {
  const auto gaps = set.gaps();
  const auto g = static_cast<Element>(gaps.size());
  std::vector<Element> parts;
  parts.reserve(gaps.size());
  for (Element i = 1; i <= g; ++i) {
    parts.push_back(gaps[static_cast<std::size_t>(g - i)] - (g - i));
  }
  return Partition(std::move(parts));
}

NumericalSet set_from_partition(const Partition& lambda) {
  const auto g = static_cast<Element>(lambda.length());
  std::vector<Element> gaps;
  gaps.reserve(lambda.length());
  for (Element i = 1; i <= g; ++i) {
    gaps.push_back(lambda.parts()[static_cast<std::size_t>(i - 1)] + (g - i));
  }
  return NumericalSet::from_gaps(gaps);
}

std::vector<Element> hook_multiset(const Partition& lambda) {
  const auto columns = conjugate(lambda).parts();
  std::vector<Element> hooks;
  const auto& rows = lambda.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Element j = 0; j < rows[i]; ++j) {
      Element arm = rows[i] - j - 1;
      Element leg = columns[static_cast<std::size_t>(j)] - static_cast<Element>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

std::vector<Element> hook_set(const Partition& lambda) {
  auto hooks = hook_multiset(lambda);
  std::sort(hooks.begin(), hooks.end());
  hooks.erase(std::unique(hooks.begin(), hooks.end()), hooks.end());
  return hooks;
}

std::uint64_t count_partitions_with_hookset(const NumericalSemigroup& s, Method method,
                                            const EnumerationOptions& options) {
  const auto collection = associated_sets(s, method, options);
  const auto gaps = s.gaps();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < collection.count(); ++i) {
    auto lambda = partition_from_set(collection.numerical_set(i));
    if (hook_set(lambda) != gaps) {
      throw ValidationFailure("partition of an associated set has the wrong hook set");
    }
    ++count;
  }
  return count;
}

}  // namespace antiatom
