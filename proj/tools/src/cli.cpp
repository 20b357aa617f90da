#include "antiatom_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "antiatom_cli/suites.hpp"

namespace antiatom::cli {

using json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json pairs(const std::vector<std::pair<Element, Element>>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

json triangles_record(const std::vector<FrobeniusTriangle>& triangles) {
  json out = json::array();
  for (const auto& t : triangles) out.push_back({t.p, t.x, t.y});
  return out;
}

// Options shared by every command that takes a semigroup or set description.
struct Request {
  std::string generators;
  std::string gaps;
  std::string family;
  std::string input;
  std::string method = "rec";
  std::string format = "json";
  std::string output;
  std::uint64_t budget = EnumerationOptions{}.choice_budget;
  std::size_t subset_limit = EnumerationOptions{}.subset_limit;
  unsigned threads = 1;
  bool validate = kValidateByDefault;
  Element frobenius = 0;
  std::string suite = "table1";
  std::string parts;
  Element ratio_upto = 0;
  unsigned repeats = 1;
};

Description describe(const Request& r) {
  const int given = !r.generators.empty() + !r.gaps.empty() + !r.family.empty() + !r.input.empty();
  if (given != 1) {
    throw InvalidInput("give exactly one of --generators, --gaps, --family, --input");
  }
  if (!r.generators.empty()) {
    return {NumericalSemigroup::from_generators(parse_integer_list(r.generators)).as_set(), {}};
  }
  if (!r.gaps.empty()) return {set_from_gaps(parse_integer_list(r.gaps)), {}};
  if (!r.family.empty()) return parse_family_spec(r.family);

  json record;
  try {
    if (r.input == "-") {
      record = json::parse(std::cin);
    } else {
      std::ifstream in(r.input);
      if (!in) throw InvalidInput("cannot read input file " + r.input);
      record = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
  return parse_description(record);
}

EnumerationOptions enumeration_options(const Request& r) {
  EnumerationOptions o;
  o.choice_budget = r.budget;
  o.subset_limit = r.subset_limit;
  o.threads = std::max(1U, r.threads);
  o.validate = r.validate;
  return o;
}

Method method_of(const Request& r) {
  auto m = parse_method(r.method);
  if (!m) throw InvalidInput("unknown method '" + r.method + "' (brute, char, alg1, rec)");
  return *m;
}

json analyze(const Request& r) {
  const auto s = require_semigroup(describe(r));
  const auto poset = build_void_poset(s);
  const auto triangles = frobenius_triangles(s);
  return {
      {"semigroup", semigroup_record(s)},
      {"symmetry", std::string(to_string(classify_symmetry(s)))},
      {"poset",
       {{"elements", poset.elements()},
        {"hasse", pairs(poset.hasse_edges())},
        {"maximal", maximal_elements(poset)},
        {"minimal", minimal_elements(poset)}}},
      {"graph", graph_record(build_gpf(s))},
      {"triangles", triangles_record(triangles)},
      {"triangle_free", triangles.empty()},
      {"choice_product", choice_product_estimate(s)},
  };
}

json associated(const Request& r, bool with_sets) {
  const auto s = require_semigroup(describe(r));
  const Method method = method_of(r);
  Stopwatch clock;
  auto c = associated_sets(s, method, enumeration_options(r));
  const double ms = clock.elapsed_ms();
  json out = {
      {"semigroup", semigroup_record(s)},
      {"method", std::string(to_string(method))},
      {"P", c.count()},
  };
  if (with_sets) out["associated"] = c.extras;
  out["elapsed_ms"] = ms;
  return out;
}

json classify(const Request& r) {
  const auto s = require_semigroup(describe(r));
  const auto graph = build_gpf(s);
  json out = {
      {"semigroup", semigroup_record(s)},
      {"symmetry", std::string(to_string(classify_symmetry(s)))},
      {"almost_symmetric", s.is_almost_symmetric()},
      {"kappa", graph.kappa()},
      {"lower_bound_P", std::uint64_t{1} << graph.kappa()},
      {"triangle_free", is_triangle_free(s)},
      {"maximal_embedding_dimension", has_maximal_embedding_dimension(s)},
  };
  if (s.type() == 1) out["predicted_P"] = 1;
  if (s.type() == 2) out["predicted_P"] = classify_type2(s);
  if (s.type() == 3) {
    const auto c = classify_type3(s);
    out["type3"] = {{"p", c.p},
                    {"q", c.q},
                    {"f", c.f},
                    {"case", c.case_number},
                    {"predicted_P", c.predicted_P},
                    {"p_minimal", c.p_minimal}};
    out["predicted_P"] = c.predicted_P;
  }
  if (s.frobenius() > 0 && has_maximal_embedding_dimension(s) && is_triangle_free(s)) {
    out["med"] = {{"predicted_P", med_triangle_free_P(s)},
                  {"void_order_is_congruence", void_order_is_congruence(s)}};
    out["predicted_P"] = med_triangle_free_P(s);
  }
  return out;
}

json census(const Request& r) {
  Stopwatch clock;
  const auto result = census_by_frobenius(r.frobenius, std::max(1U, r.threads));
  json counts = json::array();
  for (const auto& [s, p] : result.counts) {
    counts.push_back({{"semigroup", semigroup_record(s)}, {"P", p}});
  }
  if (!result.identity_holds()) {
    throw ValidationFailure("census total " + std::to_string(result.total()) + " differs from " +
                            std::to_string(result.expected_total()));
  }
  return {
      {"frobenius", result.frobenius},
      {"counts", counts},
      {"total", result.total()},
      {"expected_total", result.expected_total()},
      {"identity_holds", result.identity_holds()},
      {"elapsed_ms", clock.elapsed_ms()},
  };
}

json list_families() {
  json out = json::array();
  const std::pair<Family, const char*> rows[] = {
      {Family::nf, "F"},
      {Family::ndf, "F,d1,...,dk"},
      {Family::five_multiples, "n"},
      {Family::interleaved_odd, "n"},
      {Family::med_example, "m"},
  };
  for (const auto& [f, params] : rows) {
    out.push_back({{"name", std::string(to_string(f))}, {"params", params}});
  }
  return {{"families", out}};
}

json nf_ratios(const Request& r) {
  const Method method = method_of(r);
  json rows = json::array();
  for (Element f = 1; f <= r.ratio_upto; ++f) {
    const std::vector<Element> params{f};
    const auto inst = make_family(Family::nf, params);
    const auto p = count_P(inst.semigroup, method, enumeration_options(r));
    rows.push_back({{"frobenius", f},
                    {"P", p},
                    {"ratio", static_cast<double>(p) / std::ldexp(1.0, static_cast<int>(f - 1))}});
  }
  return {{"family", "NF"}, {"method", std::string(to_string(method))}, {"ratios", rows}};
}

json families(const Request& r, int& exit_code) {
  if (r.family.empty()) {
    if (r.ratio_upto > 0) throw InvalidInput("--ratio-upto needs --family nf");
    return list_families();
  }
  if (r.ratio_upto > 0) {
    if (parse_family(r.family.substr(0, r.family.find(':'))) != Family::nf) {
      throw InvalidInput("--ratio-upto applies to nf only");
    }
    return nf_ratios(r);
  }
  const auto d = parse_family_spec(r.family);
  const auto& inst = *d.family;
  const auto& s = inst.semigroup;
  const Method method = method_of(r);
  Stopwatch clock;
  const auto p = count_P(s, method, enumeration_options(r));
  json out = {
      {"family", {{"name", std::string(to_string(inst.name))}, {"params", inst.params}}},
      {"semigroup", semigroup_record(s)},
      {"method", std::string(to_string(method))},
      {"P", p},
      {"elapsed_ms", clock.elapsed_ms()},
  };
  bool match = true;
  if (inst.predicted_P) {
    out["predicted_P"] = *inst.predicted_P;
    match = match && *inst.predicted_P == p;
  }
  if (inst.predicted_type) {
    out["predicted_type"] = *inst.predicted_type;
    match = match && *inst.predicted_type == s.type();
  }
  if (inst.name == Family::nf) {
    out["ratio"] = static_cast<double>(p) / std::ldexp(1.0, static_cast<int>(s.frobenius() - 1));
  }
  if (!inst.predicted_P && !inst.predicted_type) {
    out["verdict"] = "no prediction";
  } else {
    out["verdict"] = match ? "match" : "mismatch";
    if (!match) exit_code = kInternalFailure;
  }
  return out;
}

json partitions(const Request& r) {
  json out;
  NumericalSet t;
  std::optional<NumericalSemigroup> semigroup;
  if (!r.parts.empty()) {
    if (!r.generators.empty() || !r.gaps.empty() || !r.family.empty() || !r.input.empty()) {
      throw InvalidInput("--parts cannot be combined with a set description");
    }
    t = set_from_partition(Partition(parse_integer_list(r.parts)));
  } else {
    t = describe(r).set;
  }
  const auto lambda = partition_from_set(t);
  const auto atom = atom_monoid(t);
  out["set"] = {{"gaps", t.gaps()}, {"frobenius", t.frobenius()}};
  out["partition"] = lambda.parts();
  out["conjugate"] = conjugate(lambda).parts();
  out["hooks"] = hooks_record(lambda);
  out["atom_monoid"] = semigroup_record(atom);
  out["hook_set_equals_atom_gaps"] = hook_set(lambda) == atom.gaps();
  if (atom.as_set() == t) {
    out["hookset_count"] = count_partitions_with_hookset(atom, method_of(r), enumeration_options(r));
  }
  return out;
}

json bench(const Request& r) {
  auto suite = suite_by_name(r.suite);
  if (!suite) throw InvalidInput("unknown suite '" + r.suite + "' (table1)");
  std::vector<Method> methods{Method::alg1, Method::alg1_recursive};
  if (r.method != "both") methods = {method_of(r)};
  const auto options = enumeration_options(r);
  json rows = json::array();
  for (const auto& instance : *suite) {
    const auto s = NumericalSemigroup::from_generators(instance.generators);
    for (Method m : methods) {
      double best = std::numeric_limits<double>::infinity();
      std::uint64_t p = 0;
      for (unsigned k = 0; k < std::max(1U, r.repeats); ++k) {
        Stopwatch clock;
        p = count_P(s, m, options);
        best = std::min(best, clock.elapsed_ms());
      }
      if (p != instance.expected_P) {
        throw ValidationFailure(instance.name + ": " + std::string(to_string(m)) + " gave P = " +
                                std::to_string(p) + ", expected " +
                                std::to_string(instance.expected_P));
      }
      rows.push_back({{"instance", instance.name},
                      {"method", std::string(to_string(m))},
                      {"P", p},
                      {"elapsed_ms", best}});
    }
  }
  return {{"suite", r.suite}, {"rows", rows}};
}

// Text rendering: one "key: value" line per field, nested objects indented,
// lists of pairs (Hasse diagram, graph edges) one pair per line.
bool is_pair_list(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& e) {
           return e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number();
         });
}

bool is_record_list(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream os;
    os << v.get<double>();
    return os.str();
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += e.is_array() ? "(" + scalar_text(e) + ")" : scalar_text(e);
    }
    return "{" + s + "}";
  }
  return v.dump();
}

void render_text(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (is_pair_list(value)) {
      out << pad << key << ":\n";
      for (const auto& e : value) out << pad << "  " << e[0] << " -> " << e[1] << '\n';
    } else if (is_record_list(value)) {
      out << pad << key << ":\n";
      for (const auto& e : value) {
        out << pad << "  -\n";
        render_text(e, out, indent + 4);
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit(const json& report, const Request& r, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!r.output.empty()) {
    file.open(r.output);
    if (!file) throw InvalidInput("cannot write output file " + r.output);
    sink = &file;
  }
  if (r.format == "text") {
    render_text(report, *sink, 0);
  } else {
    *sink << report.dump(2) << '\n';
  }
}

void add_common(CLI::App* cmd, Request& r) {
  cmd->add_option("--format", r.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", r.output, "Write the report to this file");
  cmd->add_option("--threads", r.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  cmd->add_flag("--validate,!--no-validate", r.validate,
                "Recheck every associated set against the definitional atom monoid");
}

void add_description(CLI::App* cmd, Request& r) {
  cmd->add_option("--generators", r.generators, "Comma-separated generators, e.g. 19,21,24");
  cmd->add_option("--gaps", r.gaps, "Comma-separated gaps, e.g. 1,2,4");
  cmd->add_option("--family", r.family, "Family instance name:params, e.g. five_multiples:6");
  cmd->add_option("--input", r.input, "JSON description file ('-' for stdin)");
}

void add_enumeration(CLI::App* cmd, Request& r) {
  cmd->add_option("--method", r.method, "brute | char | alg1 | rec");
  cmd->add_option("--budget", r.budget, "Largest accepted choice product for alg1/rec");
  cmd->add_option("--subset-limit", r.subset_limit, "Largest |M(S)| accepted by brute/char");
}

}  // namespace

std::vector<Element> parse_integer_list(const std::string& text) {
  std::vector<Element> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    Element value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidInput("not an integer: '" + token + "' in '" + text + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

Description parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  auto family = parse_family(name);
  if (!family) throw InvalidInput("unknown family '" + name + "'");
  std::vector<Element> params;
  if (colon != std::string::npos) params = parse_integer_list(spec.substr(colon + 1));
  auto inst = make_family(*family, params);
  NumericalSet set = inst.semigroup.as_set();
  return {set, std::move(inst)};
}

Description parse_description(const json& record) {
  if (!record.is_object()) throw InvalidInput("description must be a JSON object");
  const int given = record.contains("generators") + record.contains("gaps") +
                    record.contains("family");
  if (given != 1) {
    throw InvalidInput("description needs exactly one of generators, gaps, family");
  }
  try {
    if (record.contains("generators")) {
      const auto gens = record.at("generators").get<std::vector<Element>>();
      return {NumericalSemigroup::from_generators(gens).as_set(), {}};
    }
    if (record.contains("gaps")) {
      return {set_from_gaps(record.at("gaps").get<std::vector<Element>>()), {}};
    }
    const auto& fam = record.at("family");
    const auto name = fam.at("name").get<std::string>();
    auto family = parse_family(name);
    if (!family) throw InvalidInput("unknown family '" + name + "'");
    const auto params = fam.value("params", std::vector<Element>{});
    auto inst = make_family(*family, params);
    NumericalSet set = inst.semigroup.as_set();
    return {set, std::move(inst)};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed description: ") + e.what());
  }
}

NumericalSemigroup require_semigroup(const Description& d) {
  if (d.family) return d.family->semigroup;
  try {
    return NumericalSemigroup::from_set(d.set);
  } catch (const NotClosedError& e) {
    const auto [a, b] = e.witness();
    throw InvalidInput("not a semigroup: " + std::to_string(a) + " + " + std::to_string(b) +
                       " = " + std::to_string(a + b) + " is a gap");
  }
}

json semigroup_record(const NumericalSemigroup& s) {
  return {
      {"frobenius", s.frobenius()},
      {"genus", s.genus()},
      {"multiplicity", s.multiplicity()},
      {"embedding_dimension", s.embedding_dimension()},
      {"type", s.type()},
      {"pf", s.pseudo_frobenius()},
      {"void", s.void_elements()},
      {"min_generators", s.min_generators()},
      {"generators", s.min_generators()},
  };
}

json graph_record(const PFGraph& g) {
  return {
      {"vertices", g.vertices()},
      {"edges", pairs(g.edges())},
      {"loops", g.loops()},
      {"kappa", g.kappa()},
  };
}

json hooks_record(const Partition& lambda) {
  return {{"multiset", hook_multiset(lambda)}, {"set", hook_set(lambda)}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical sets with a prescribed atom monoid", "antiatom"};
  app.require_subcommand(1);
  Request r;

  auto* analyze_cmd = app.add_subcommand("analyze", "Descriptors, void poset, GPF graph, triangles");
  auto* associated_cmd = app.add_subcommand("associated", "List every T with A(T) = S");
  auto* count_cmd = app.add_subcommand("count", "Compute P(S)");
  auto* classify_cmd = app.add_subcommand("classify", "Symmetry class and closed-form predictions");
  auto* census_cmd = app.add_subcommand("census", "Group all numerical sets of Frobenius number F");
  auto* families_cmd = app.add_subcommand("families", "Build a named family and check its prediction");
  auto* partitions_cmd = app.add_subcommand("partitions", "Partition of a numerical set and its hooks");
  auto* bench_cmd = app.add_subcommand("bench", "Time alg1 against the recursive variant");

  for (auto* cmd : {analyze_cmd, associated_cmd, count_cmd, classify_cmd, census_cmd, families_cmd,
                    partitions_cmd, bench_cmd}) {
    add_common(cmd, r);
  }
  for (auto* cmd : {analyze_cmd, associated_cmd, count_cmd, classify_cmd, partitions_cmd}) {
    add_description(cmd, r);
  }
  for (auto* cmd : {associated_cmd, count_cmd, families_cmd, partitions_cmd, bench_cmd}) {
    add_enumeration(cmd, r);
  }
  census_cmd->add_option("--frobenius", r.frobenius, "Frobenius number F")->required();
  families_cmd->add_option("--family", r.family, "name:params, e.g. five_multiples:6");
  families_cmd->add_option("--ratio-upto", r.ratio_upto, "Report P(N_F)/2^(F-1) for F = 1..N");
  partitions_cmd->add_option("--parts", r.parts, "Start from a partition instead, e.g. 3,1,1");
  bench_cmd->add_option("--suite", r.suite, "Benchmark suite (table1)");
  bench_cmd->add_option("--repeats", r.repeats, "Runs per row; the minimum time is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  if (bench_cmd->parsed() && bench_cmd->count("--method") == 0) r.method = "both";

  try {
    int code = kOk;
    json report;
    if (analyze_cmd->parsed()) report = analyze(r);
    if (associated_cmd->parsed()) report = associated(r, true);
    if (count_cmd->parsed()) report = associated(r, false);
    if (classify_cmd->parsed()) report = classify(r);
    if (census_cmd->parsed()) report = census(r);
    if (families_cmd->parsed()) report = families(r, code);
    if (partitions_cmd->parsed()) report = partitions(r);
    if (bench_cmd->parsed()) report = bench(r);
    emit(report, r, out);
    return code;
  } catch (const LimitExceeded& e) {
    err << "refused: " << e.what()
        << " (raise --budget / --subset-limit or choose another --method)\n";
    return kBudgetRefused;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationFailure& e) {
    err << "validation failure: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace antiatom::cli
