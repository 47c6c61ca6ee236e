#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scs/engine.hpp"
#include "scs/errors.hpp"
#include "scs/instance.hpp"
#include "scs/reductions.hpp"
#include "scs/solvers.hpp"
#include "scs/source_problems.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kNoSolution = 2;
constexpr int kCheckFailed = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scs::ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw scs::ParseError("cannot write '" + path + "'");
  out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return hex;
}

// One structured result object per invocation, printed to stdout.
struct RunReport {
  explicit RunReport(std::string cmd)
      : command(std::move(cmd)), start(std::chrono::steady_clock::now()) {}

  std::string command;
  ordered_json inputs = ordered_json::object();
  std::string outcome = "ok";
  ordered_json extra = ordered_json::object();
  ordered_json checks = ordered_json::array();
  std::vector<std::string> limits_hit;
  std::chrono::steady_clock::time_point start;

  void note_input(const std::string& path, const std::string& bytes) {
    inputs[path] = fnv1a_hex(bytes);
  }
  void check(const std::string& name, const std::string& expected,
             const std::string& actual) {
    checks.push_back({{"name", name},
                      {"expected", expected},
                      {"actual", actual},
                      {"pass", expected == actual}});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.at("pass").get<bool>()) return false;
    return true;
  }
  void print() const {
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outcome"] = outcome;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    j["checks"] = checks;
    j["limits_hit"] = limits_hit;
    j["wall_ms"] = wall;
    std::cout << j.dump(2) << "\n";
  }
};

ordered_json solution_json(const scs::Pattern& text, const scs::Alphabet& alphabet) {
  ordered_json j;
  j["length"] = text.size();
  j["text"] = text.to_tokens(alphabet);
  j["rendered"] = text.render(alphabet);
  return j;
}

// Accepts a solution JSON ({"text": [...]}), a bare JSON token array, or
// whitespace-separated tokens.
scs::Pattern read_superstring(const std::string& content,
                              const scs::Alphabet& alphabet) {
  std::vector<std::string> tokens;
  bool parsed = false;
  try {
    const auto j = nlohmann::json::parse(content);
    if (j.is_object() && j.contains("text")) {
      for (const auto& t : j.at("text")) tokens.push_back(t.get<std::string>());
      parsed = true;
    } else if (j.is_array()) {
      for (const auto& t : j) tokens.push_back(t.get<std::string>());
      parsed = true;
    }
  } catch (const nlohmann::json::exception&) {
  }
  if (!parsed) {
    std::istringstream in(content);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  return scs::Pattern::from_tokens(tokens, alphabet);
}

std::vector<int> read_int_array(const nlohmann::json& j, const std::string& key) {
  std::vector<int> values;
  for (const auto& v : j.at(key)) values.push_back(v.get<int>());
  return values;
}

ordered_json stats_json(const scs::FrontierStats& stats) {
  return {{"states_stored", stats.states_stored},
          {"states_expanded", stats.states_expanded},
          {"max_frontier", stats.max_frontier},
          {"layers", stats.layers}};
}

// --- command argument bags ---------------------------------------------------

struct GenArgs {
  int vertices = 4;
  double edge_prob = 0.5;
  int items = 3;
  int sets = 3;
  double membership_prob = 0.5;
  int variables = 3;
  int clauses = 2;
  std::uint64_t seed = 1;
  std::string out;
};

struct ReduceArgs {
  std::string kind;
  std::string in;
  std::string out;
  std::string cert;
};

struct SolveArgs {
  std::string in;
  std::string algo = "exact-auto";
  std::string out;
  std::string format = "json";
  std::size_t max_length = 4096;
  std::uint64_t max_states = 1'000'000;
  std::size_t piece_cap = 16;
};

struct WitnessArgs {
  std::string kind;
  std::string source;
  std::string solution;
  std::string out;
};

struct ExtractArgs {
  std::string kind;
  std::string source;
  std::string superstring;
  std::string out;
};

struct VerifyArgs {
  std::string instance;
  std::string superstring;
};

struct RoundtripArgs {
  std::string kind;
  std::string source;
  std::size_t max_length = 4096;
  std::uint64_t max_states = 10'000'000;
  std::size_t piece_cap = 16;
};

int run_gen(const std::string& flavor, const GenArgs& a) {
  RunReport report("gen " + flavor);
  std::string content;
  if (flavor == "graph") {
    content = scs::write_graph(scs::generate_graph(a.vertices, a.edge_prob, a.seed));
  } else if (flavor == "setcover") {
    content = scs::write_set_cover(
        scs::generate_set_cover(a.items, a.sets, a.membership_prob, a.seed));
  } else {
    content = scs::write_cnf3(scs::generate_cnf3(a.variables, a.clauses, a.seed));
  }
  spill(a.out, content);
  report.note_input(a.out, content);
  report.outcome = "generated";
  report.print();
  return kOk;
}

scs::ReductionArtifact reduce_kind(const std::string& kind, const std::string& text) {
  if (kind == "vc") return scs::vc_to_scs(scs::read_graph(text));
  if (kind == "coloring") return scs::coloring_to_scsw(scs::read_graph(text));
  if (kind == "setcover") return scs::setcover_to_scsn(scs::read_set_cover(text));
  return scs::minones_to_scsnw(scs::read_cnf3(text));
}

int run_reduce(const ReduceArgs& a) {
  RunReport report("reduce " + a.kind);
  const std::string text = slurp(a.in);
  report.note_input(a.in, text);
  const scs::ReductionArtifact artifact = reduce_kind(a.kind, text);
  spill(a.out, scs::write_instance(artifact.instance));
  if (!a.cert.empty()) spill(a.cert, scs::write_certificate(artifact.certificate));
  static const std::map<std::string, std::string> expected_variant = {
      {"vc", "scs"}, {"coloring", "scsw"}, {"setcover", "scsn"}, {"minones", "scsnw"}};
  report.check("variant", expected_variant.at(a.kind),
               scs::variant_name(artifact.instance.variant()));
  report.extra["positives"] = artifact.instance.positives().size();
  report.extra["negatives"] = artifact.instance.negatives().size();
  report.extra["rules"] = artifact.instance.rules().size();
  report.outcome = "reduced";
  report.print();
  return report.all_passed() ? kOk : kCheckFailed;
}

int run_solve(const SolveArgs& a) {
  RunReport report("solve " + a.algo);
  const std::string text = slurp(a.in);
  report.note_input(a.in, text);
  const scs::Instance instance = scs::read_instance(text);
  scs::SearchLimits limits;
  limits.max_length = a.max_length;
  limits.max_states = a.max_states;

  scs::SolveOutcome outcome;
  try {
    if (a.algo == "exact-dp") {
      outcome = scs::solve_exact_dp(instance, a.piece_cap);
    } else if (a.algo == "exact-auto") {
      outcome = scs::shortest_superstring(instance, limits);
    } else if (a.algo == "greedy") {
      outcome = scs::solve_greedy(instance, limits);
    } else {
      outcome = scs::solve_group_merge(instance, limits);
    }
  } catch (const scs::HeuristicError& e) {
    report.outcome = std::string("heuristic failed: ") + e.what();
    report.print();
    return kNoSolution;
  }

  report.extra["stats"] = stats_json(outcome.stats);
  switch (outcome.kind) {
    case scs::SolveOutcome::Kind::Optimal:
    case scs::SolveOutcome::Kind::Feasible: {
      report.outcome =
          outcome.kind == scs::SolveOutcome::Kind::Optimal ? "optimal" : "feasible";
      report.extra["length"] = outcome.length;
      if (!a.out.empty()) {
        if (a.format == "text") {
          std::string joined;
          for (const auto& tok : outcome.text.to_tokens(instance.alphabet())) {
            if (!joined.empty()) joined += " ";
            joined += tok;
          }
          spill(a.out, joined + "\n");
        } else {
          spill(a.out, solution_json(outcome.text, instance.alphabet()).dump(2) + "\n");
        }
      }
      report.print();
      return kOk;
    }
    case scs::SolveOutcome::Kind::Infeasible:
      report.outcome = "infeasible";
      report.print();
      return kNoSolution;
    case scs::SolveOutcome::Kind::LimitExceeded:
    default:
      report.outcome = "limit exceeded";
      report.limits_hit.push_back(outcome.limit_name);
      report.print();
      return kNoSolution;
  }
}

// Cost of a provided solution: distinct vertices / distinct colors /
// distinct sets / true variables.
std::int64_t solution_cost(const std::string& kind, const nlohmann::json& j) {
  if (kind == "coloring") {
    std::set<int> distinct;
    for (int c : read_int_array(j, "colors")) distinct.insert(c);
    return static_cast<std::int64_t>(distinct.size());
  }
  const char* key = kind == "vc" ? "cover" : kind == "setcover" ? "sets" : "true_vars";
  std::set<int> distinct;
  for (int v : read_int_array(j, key)) distinct.insert(v);
  return static_cast<std::int64_t>(distinct.size());
}

int run_witness(const WitnessArgs& a) {
  RunReport report("witness " + a.kind);
  const std::string source_text = slurp(a.source);
  const std::string solution_text = slurp(a.solution);
  report.note_input(a.source, source_text);
  report.note_input(a.solution, solution_text);
  const auto solution = nlohmann::json::parse(solution_text);

  scs::Pattern witness;
  scs::ReductionArtifact artifact = reduce_kind(a.kind, source_text);
  if (a.kind == "vc") {
    const scs::Graph g = scs::read_graph(source_text);
    std::vector<int> cover = read_int_array(solution, "cover");
    for (int& v : cover) --v;
    witness = scs::vc_witness(g, cover);
  } else if (a.kind == "coloring") {
    const scs::Graph g = scs::read_graph(source_text);
    witness = scs::coloring_witness(g, read_int_array(solution, "colors"));
  } else if (a.kind == "setcover") {
    const scs::SetCover sc = scs::read_set_cover(source_text);
    std::vector<int> sets = read_int_array(solution, "sets");
    for (int& s : sets) --s;
    witness = scs::setcover_witness(sc, sets);
  } else {
    const scs::Cnf3 cnf = scs::read_cnf3(source_text);
    std::vector<bool> assignment(static_cast<std::size_t>(cnf.variable_count), false);
    for (int v : read_int_array(solution, "true_vars")) {
      if (v < 1 || v > cnf.variable_count)
        throw scs::ContractError("true variable index out of range");
      assignment[static_cast<std::size_t>(v - 1)] = true;
    }
    witness = scs::minones_witness(cnf, assignment);
  }

  const std::int64_t cost = solution_cost(a.kind, solution);
  report.check("witness_length",
               std::to_string(artifact.certificate.predicted_length(cost)),
               std::to_string(witness.size()));
  report.extra["length"] = witness.size();
  if (!a.out.empty())
    spill(a.out, solution_json(witness, artifact.instance.alphabet()).dump(2) + "\n");
  report.outcome = "witnessed";
  report.print();
  return report.all_passed() ? kOk : kCheckFailed;
}

int run_extract(const ExtractArgs& a) {
  RunReport report("extract " + a.kind);
  const std::string source_text = slurp(a.source);
  const std::string string_text = slurp(a.superstring);
  report.note_input(a.source, source_text);
  report.note_input(a.superstring, string_text);
  const scs::ReductionArtifact artifact = reduce_kind(a.kind, source_text);
  const scs::Pattern s = read_superstring(string_text, artifact.instance.alphabet());

  ordered_json out;
  if (a.kind == "vc") {
    std::vector<int> cover = scs::scs_to_vc(scs::read_graph(source_text), s);
    for (int& v : cover) ++v;
    out = {{"cover", cover}, {"size", cover.size()}};
  } else if (a.kind == "coloring") {
    const std::vector<int> colors =
        scs::scsw_to_coloring(scs::read_graph(source_text), s);
    std::set<int> distinct(colors.begin(), colors.end());
    std::vector<int> shifted = colors;
    for (int& c : shifted) ++c;
    out = {{"colors", shifted}, {"colors_used", distinct.size()}};
  } else if (a.kind == "setcover") {
    std::vector<int> sets =
        scs::scsn_to_setcover(scs::read_set_cover(source_text), s);
    for (int& v : sets) ++v;
    out = {{"sets", sets}, {"size", sets.size()}};
  } else {
    const std::vector<bool> assignment =
        scs::scsnw_to_assignment(scs::read_cnf3(source_text), s);
    std::vector<int> true_vars;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i]) true_vars.push_back(static_cast<int>(i) + 1);
    out = {{"true_vars", true_vars}, {"weight", true_vars.size()}};
  }
  if (!a.out.empty()) spill(a.out, out.dump(2) + "\n");
  report.extra["solution"] = out;
  report.outcome = "extracted";
  report.print();
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  RunReport report("verify");
  const std::string instance_text = slurp(a.instance);
  const std::string string_text = slurp(a.superstring);
  report.note_input(a.instance, instance_text);
  report.note_input(a.superstring, string_text);
  const scs::Instance instance = scs::read_instance(instance_text);
  const scs::Pattern s = read_superstring(string_text, instance.alphabet());
  const scs::ValidationReport result = scs::validate_superstring(instance, s);
  report.check("valid", "true", result.is_valid() ? "true" : "false");
  report.extra["missing_positives"] = result.missing_positives;
  ordered_json violations = ordered_json::array();
  for (const auto& v : result.violations)
    violations.push_back(
        {{"source", v.source == scs::Violation::Source::Negative ? "negative" : "rule"},
         {"index", v.index},
         {"position", v.position}});
  report.extra["violations"] = violations;
  report.outcome = result.is_valid() ? "valid" : "invalid";
  report.print();
  return result.is_valid() ? kOk : kCheckFailed;
}

int run_roundtrip(const RoundtripArgs& a) {
  RunReport report("roundtrip " + a.kind);
  const std::string source_text = slurp(a.source);
  report.note_input(a.source, source_text);

  // Oracle cost and oracle solution, by kind.
  std::int64_t oracle = 0;
  scs::Pattern witness;
  std::int64_t extracted = 0;
  const scs::ReductionArtifact artifact = reduce_kind(a.kind, source_text);
  if (a.kind == "vc") {
    const scs::Graph g = scs::read_graph(source_text);
    const scs::CoverResult best = scs::min_vertex_cover(g);
    oracle = static_cast<std::int64_t>(best.size);
    witness = scs::vc_witness(g, best.vertices);
    extracted = static_cast<std::int64_t>(scs::scs_to_vc(g, witness).size());
  } else if (a.kind == "coloring") {
    const scs::Graph g = scs::read_graph(source_text);
    const scs::ColoringResult best = scs::chromatic_number(g);
    oracle = best.colors;
    witness = scs::coloring_witness(g, best.assignment);
    const std::vector<int> colors = scs::scsw_to_coloring(g, witness);
    extracted = static_cast<std::int64_t>(
        std::set<int>(colors.begin(), colors.end()).size());
  } else if (a.kind == "setcover") {
    const scs::SetCover sc = scs::read_set_cover(source_text);
    const scs::SetCoverResult best = scs::min_set_cover(sc);
    if (!best.feasible) throw scs::ContractError("roundtrip: instance is not coverable");
    oracle = static_cast<std::int64_t>(best.size);
    witness = scs::setcover_witness(sc, best.sets);
    extracted = static_cast<std::int64_t>(scs::scsn_to_setcover(sc, witness).size());
  } else {
    const scs::Cnf3 cnf = scs::read_cnf3(source_text);
    const scs::MinOnesResult best = scs::min_ones_3sat(cnf);
    if (!best.satisfiable) {
      report.outcome = "unsatisfiable";
      report.print();
      return kNoSolution;
    }
    oracle = static_cast<std::int64_t>(best.weight);
    witness = scs::minones_witness(cnf, best.assignment);
    extracted = static_cast<std::int64_t>(
        scs::assignment_weight(scs::scsnw_to_assignment(cnf, witness)));
  }

  const scs::Certificate& cert = artifact.certificate;
  report.extra["oracle_cost"] = oracle;
  report.check("witness_length", std::to_string(cert.predicted_length(oracle)),
               std::to_string(witness.size()));
  report.check("roundtrip_cost", std::to_string(oracle), std::to_string(extracted));
  report.extra["feasibility_bound"] = scs::feasibility_bound(artifact.instance);

  // Exact search when the instance is within reach; a tripped limit only
  // skips the optimality comparison.
  scs::SearchLimits limits;
  limits.max_length = std::max(a.max_length, witness.size() + 1);
  limits.max_states = a.max_states;
  bool searched = false;
  scs::SolveOutcome outcome;
  if (artifact.instance.variant() == scs::Variant::Scs) {
    try {
      outcome = scs::solve_exact_dp(artifact.instance, a.piece_cap);
      searched = true;
    } catch (const scs::SizeGuardError&) {
    }
  }
  if (!searched) {
    const auto& inst = artifact.instance;
    bool can_search = inst.alphabet().size() <= 64 && inst.positives().size() <= 64;
    for (const auto& p : inst.positives())
      if (p.size() >= 64) can_search = false;
    if (can_search) {
      outcome = scs::shortest_superstring(inst, limits);
      searched = true;
      report.extra["stats"] = stats_json(outcome.stats);
    }
  }
  if (searched) {
    if (outcome.kind == scs::SolveOutcome::Kind::Optimal) {
      report.check("optimal_length", std::to_string(cert.predicted_length(oracle)),
                   std::to_string(outcome.length));
    } else if (outcome.kind == scs::SolveOutcome::Kind::LimitExceeded) {
      report.limits_hit.push_back(outcome.limit_name);
    } else {
      report.check("optimal_length", std::to_string(cert.predicted_length(oracle)),
                   "infeasible");
    }
  }
  report.outcome = "roundtripped";
  report.print();
  return report.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortest common superstring toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> kinds = {"vc", "coloring", "setcover", "minones"};

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a source problem file");
  gen->require_subcommand(1);
  auto* gen_graph = gen->add_subcommand("graph", "random simple graph");
  gen_graph->add_option("--vertices", gen_args.vertices)->check(CLI::PositiveNumber);
  gen_graph->add_option("--edge-prob", gen_args.edge_prob)->check(CLI::Range(0.0, 1.0));
  auto* gen_sc = gen->add_subcommand("setcover", "random coverable set system");
  gen_sc->add_option("--items", gen_args.items)->check(CLI::PositiveNumber);
  gen_sc->add_option("--sets", gen_args.sets)->check(CLI::PositiveNumber);
  gen_sc->add_option("--membership-prob", gen_args.membership_prob)
      ->check(CLI::Range(0.0, 1.0));
  auto* gen_cnf = gen->add_subcommand("cnf", "random 3-literal clauses");
  gen_cnf->add_option("--variables", gen_args.variables)->check(CLI::PositiveNumber);
  gen_cnf->add_option("--clauses", gen_args.clauses)->check(CLI::NonNegativeNumber);
  for (auto* sub : {gen_graph, gen_sc, gen_cnf}) {
    sub->add_option("--seed", gen_args.seed);
    sub->add_option("--out", gen_args.out)->required();
  }

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "compile a source problem");
  reduce->add_option("kind", reduce_args.kind)->required()->check(CLI::IsMember(kinds));
  reduce->add_option("--in", reduce_args.in)->required();
  reduce->add_option("--out", reduce_args.out)->required();
  reduce->add_option("--cert", reduce_args.cert);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--in", solve_args.in)->required();
  solve->add_option("--algo", solve_args.algo)
      ->check(CLI::IsMember({"exact-dp", "exact-auto", "greedy", "group-merge"}));
  solve->add_option("--out", solve_args.out);
  solve->add_option("--format", solve_args.format)
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--max-length", solve_args.max_length);
  solve->add_option("--max-states", solve_args.max_states);
  solve->add_option("--piece-cap", solve_args.piece_cap);

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "build the canonical superstring");
  witness->add_option("kind", witness_args.kind)->required()->check(CLI::IsMember(kinds));
  witness->add_option("--source", witness_args.source)->required();
  witness->add_option("--solution", witness_args.solution)->required();
  witness->add_option("--out", witness_args.out);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "read a solution out of a superstring");
  extract->add_option("kind", extract_args.kind)->required()->check(CLI::IsMember(kinds));
  extract->add_option("--source", extract_args.source)->required();
  extract->add_option("--superstring", extract_args.superstring)->required();
  extract->add_option("--out", extract_args.out);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "validate a superstring");
  verify->add_option("--instance", verify_args.instance)->required();
  verify->add_option("--superstring", verify_args.superstring)->required();

  RoundtripArgs roundtrip_args;
  auto* roundtrip = app.add_subcommand("roundtrip", "oracle, reduce, solve, compare");
  roundtrip->add_option("kind", roundtrip_args.kind)
      ->required()
      ->check(CLI::IsMember(kinds));
  roundtrip->add_option("--source", roundtrip_args.source)->required();
  roundtrip->add_option("--max-length", roundtrip_args.max_length);
  roundtrip->add_option("--max-states", roundtrip_args.max_states);
  roundtrip->add_option("--piece-cap", roundtrip_args.piece_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (gen_graph->parsed()) return run_gen("graph", gen_args);
    if (gen_sc->parsed()) return run_gen("setcover", gen_args);
    if (gen_cnf->parsed()) return run_gen("cnf", gen_args);
    if (reduce->parsed()) return run_reduce(reduce_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (witness->parsed()) return run_witness(witness_args);
    if (extract->parsed()) return run_extract(extract_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (roundtrip->parsed()) return run_roundtrip(roundtrip_args);
  } catch (const scs::ExtractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const scs::HeuristicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoSolution;
  } catch (const scs::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoSolution;
  } catch (const scs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
