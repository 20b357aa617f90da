#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <antiatom/numerical_set.hpp>

namespace antiatom::cli {

struct BenchInstance {
  std::string name;
  std::vector<Element> generators;
  std::uint64_t expected_P;
};

inline std::vector<Element> arithmetic_run(Element first, Element step, Element last) {
  std::vector<Element> out;
  for (Element x = first; x <= last; x += step) out.push_back(x);
  return out;
}

inline const std::vector<BenchInstance>& table1_suite() {
  static const std::vector<BenchInstance> suite = [] {
    std::vector<BenchInstance> s;
    s.push_back({"<271,309,352,422>", {271, 309, 352, 422}, 2});
    s.push_back({"<871,909,952,1022>", {871, 909, 952, 1022}, 2});
    s.push_back({"<603,608,...,653>", arithmetic_run(603, 5, 653), 2});
    s.push_back({"<49,342,349,350>", {49, 342, 349, 350}, 2});
    std::vector<Element> ten{10};
    for (Element x : arithmetic_run(101, 1, 109)) ten.push_back(x);
    s.push_back({"<10,101,...,109>", ten, 126905});
    return s;
  }();
  return suite;
}

inline std::optional<std::vector<BenchInstance>> suite_by_name(std::string_view name) {
  if (name == "table1") return table1_suite();
  return std::nullopt;
}

}  // namespace antiatom::cli
