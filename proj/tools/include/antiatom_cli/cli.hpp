#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include <antiatom/antiatom.hpp>

namespace antiatom::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalFailure = 1,
  kInvalidInput = 2,
  kBudgetRefused = 3,
};

/// A resolved input description: the numerical set it names, plus the family
/// instance when it came from --family / {"family": ...}.
struct Description {
  NumericalSet set;
  std::optional<FamilyInstance> family;
};

std::vector<Element> parse_integer_list(const std::string& text);
Description parse_family_spec(const std::string& spec);
Description parse_description(const nlohmann::ordered_json& record);
NumericalSemigroup require_semigroup(const Description& d);

nlohmann::ordered_json semigroup_record(const NumericalSemigroup& s);
nlohmann::ordered_json graph_record(const PFGraph& g);
nlohmann::ordered_json hooks_record(const Partition& lambda);

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antiatom::cli
