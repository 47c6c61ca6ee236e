#include "scs/reductions.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "json.hpp"
#include "scs/errors.hpp"

namespace scs {

namespace {

std::int64_t param(const Certificate& c, const char* key) {
  auto it = c.params.find(key);
  if (it == c.params.end())
    throw ContractError(std::string("certificate parameter '") + key + "' is missing");
  return it->second;
}

}  // namespace

std::int64_t Certificate::predicted_length(std::int64_t cost) const {
  if (reduction == "vc-scs") {
    return 4 * param(*this, "edges") + cost;
  }
  if (reduction == "coloring-scsw") {
    const std::int64_t n = param(*this, "vertices");
    const std::int64_t m = param(*this, "edges");
    return 2 * m * n + m * (2 * n + 1) * cost;
  }
  if (reduction == "setcover-scsn") {
    const std::int64_t m = param(*this, "items");
    const std::int64_t n = param(*this, "sets");
    return cost * (2 + m * (3 * n + 2)) + 1;
  }
  if (reduction == "minones-scsnw") {
    const std::int64_t n = param(*this, "variables");
    return 2 + 9 * n + 3 * n * cost;
  }
  throw ContractError("unknown reduction id '" + reduction + "'");
}

std::int64_t Certificate::cost_from_length(std::int64_t length) const {
  std::int64_t divisor = 0;
  if (reduction == "vc-scs") {
    divisor = 1;
  } else if (reduction == "coloring-scsw") {
    divisor = param(*this, "edges") * (2 * param(*this, "vertices") + 1);
  } else if (reduction == "setcover-scsn") {
    divisor = 2 + param(*this, "items") * (3 * param(*this, "sets") + 2);
  } else if (reduction == "minones-scsnw") {
    divisor = 3 * param(*this, "variables");
  } else {
    throw ContractError("unknown reduction id '" + reduction + "'");
  }
  const std::int64_t excess = length - predicted_length(0);
  if (excess == 0) return 0;
  if (excess < 0 || divisor == 0 || excess % divisor != 0)
    throw ExtractionError("length " + std::to_string(length) +
                          " does not fit the form " + predicted_formula);
  return excess / divisor;
}

std::string write_certificate(const Certificate& certificate) {
  nlohmann::ordered_json j;
  j["reduction"] = certificate.reduction;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : certificate.params) j["params"][key] = value;
  j["predicted_length"] = certificate.predicted_formula;
  j["normalization"] = certificate.normalization;
  j["token_map"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : certificate.token_map) j["token_map"][key] = value;
  j["deviations"] = certificate.deviations;
  return j.dump(2) + "\n";
}

Certificate read_certificate(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    Certificate c;
    c.reduction = j.at("reduction").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
      c.params[key] = value.get<std::int64_t>();
    c.predicted_formula = j.at("predicted_length").get<std::string>();
    c.normalization = j.at("normalization").get<std::int64_t>();
    if (j.contains("token_map"))
      for (const auto& [key, value] : j.at("token_map").items())
        c.token_map[key] = value.get<std::string>();
    if (j.contains("deviations"))
      for (const auto& d : j.at("deviations")) c.deviations.push_back(d.get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

// --- affix rule compiler ----------------------------------------------------

namespace {

std::vector<Cell> accept_set(Cell cell, const std::vector<Cell>& choices,
                             const Alphabet& alphabet) {
  if (cell != kWildcard) return {cell};
  if (choices.empty()) return alphabet.all_cells();
  return choices;
}

// Every token the pattern cell accepts is accepted by the exception cell.
bool exception_covers_pattern(const Pattern& exception, const Pattern& pattern,
                              const std::vector<Cell>& choices,
                              const Alphabet& alphabet) {
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto need = accept_set(pattern[k], choices, alphabet);
    const auto have = accept_set(exception[k], choices, alphabet);
    for (Cell c : need)
      if (std::find(have.begin(), have.end(), c) == have.end()) return false;
  }
  return true;
}

}  // namespace

std::vector<NegativeRule> affix_rules(const Pattern& center, std::size_t prefix_len,
                                      std::size_t suffix_len,
                                      const std::vector<Pattern>& allowed,
                                      const Alphabet& alphabet,
                                      const AffixOptions& options) {
  const std::size_t u = prefix_len;
  const std::size_t v = suffix_len;
  const std::size_t width = u + center.size() + v;
  if (center.empty()) throw ContractError("affix_rules: center must be non-empty");
  for (const Pattern& member : allowed) {
    if (member.size() != width)
      throw ContractError("affix_rules: member width must be prefix + center + suffix");
    for (std::size_t k = 0; k < center.size(); ++k)
      if (member[u + k] != center[k])
        throw ContractError("affix_rules: member disagrees with the center");
  }

  const std::vector<Cell>& choices = options.wildcard_choices;
  std::vector<NegativeRule> out;
  auto push = [&](std::vector<Cell> cells, std::vector<Pattern> exceptions) {
    NegativeRule rule{Pattern(std::move(cells)), std::move(exceptions), choices};
    for (const Pattern& exc : rule.exceptions)
      if (exception_covers_pattern(exc, rule.pattern, choices, alphabet)) return;
    out.push_back(std::move(rule));
  };

  {
    std::vector<Cell> cells(u, kWildcard);
    cells.insert(cells.end(), center.cells().begin(), center.cells().end());
    cells.insert(cells.end(), v, kWildcard);
    push(std::move(cells), allowed);
  }

  // A member survives into an anchored variant when its cells falling off
  // the text are wildcards and the cell meeting the anchor accepts it; the
  // meeting cell is then pinned to the anchor literal.
  auto left_ok = [&](const Pattern& m, std::size_t a) {
    for (std::size_t k = 0; k + a + 1 < u; ++k)
      if (m[k] != kWildcard) return false;
    const Cell meet = m[u - a - 1];
    return meet == kWildcard || meet == *options.begin_anchor;
  };
  auto right_ok = [&](const Pattern& m, std::size_t c) {
    for (std::size_t k = u + center.size() + c + 1; k < width; ++k)
      if (m[k] != kWildcard) return false;
    const Cell meet = m[u + center.size() + c];
    return meet == kWildcard || meet == *options.end_anchor;
  };

  if (options.begin_anchor.has_value()) {
    for (std::size_t a = 0; a < u; ++a) {
      std::vector<Cell> cells{*options.begin_anchor};
      cells.insert(cells.end(), a, kWildcard);
      cells.insert(cells.end(), center.cells().begin(), center.cells().end());
      cells.insert(cells.end(), v, kWildcard);
      std::vector<Pattern> exceptions;
      for (const Pattern& m : allowed) {
        if (!left_ok(m, a)) continue;
        std::vector<Cell> e{*options.begin_anchor};
        e.insert(e.end(), m.cells().begin() + static_cast<std::ptrdiff_t>(u - a),
                 m.cells().end());
        exceptions.emplace_back(std::move(e));
      }
      push(std::move(cells), std::move(exceptions));
    }
  }
  if (options.end_anchor.has_value()) {
    for (std::size_t c = 0; c < v; ++c) {
      std::vector<Cell> cells(u, kWildcard);
      cells.insert(cells.end(), center.cells().begin(), center.cells().end());
      cells.insert(cells.end(), c, kWildcard);
      cells.push_back(*options.end_anchor);
      std::vector<Pattern> exceptions;
      for (const Pattern& m : allowed) {
        if (!right_ok(m, c)) continue;
        std::vector<Cell> e(m.cells().begin(),
                            m.cells().begin() +
                                static_cast<std::ptrdiff_t>(u + center.size() + c));
        e.push_back(*options.end_anchor);
        exceptions.emplace_back(std::move(e));
      }
      push(std::move(cells), std::move(exceptions));
    }
  }
  if (options.begin_anchor.has_value() && options.end_anchor.has_value()) {
    for (std::size_t a = 0; a < u; ++a) {
      for (std::size_t c = 0; c < v; ++c) {
        std::vector<Cell> cells{*options.begin_anchor};
        cells.insert(cells.end(), a, kWildcard);
        cells.insert(cells.end(), center.cells().begin(), center.cells().end());
        cells.insert(cells.end(), c, kWildcard);
        cells.push_back(*options.end_anchor);
        std::vector<Pattern> exceptions;
        for (const Pattern& m : allowed) {
          if (!left_ok(m, a) || !right_ok(m, c)) continue;
          std::vector<Cell> e{*options.begin_anchor};
          e.insert(e.end(), m.cells().begin() + static_cast<std::ptrdiff_t>(u - a),
                   m.cells().begin() + static_cast<std::ptrdiff_t>(u + center.size() + c));
          e.push_back(*options.end_anchor);
          exceptions.emplace_back(std::move(e));
        }
        push(std::move(cells), std::move(exceptions));
      }
    }
  }
  return out;
}

// --- shared construction helpers --------------------------------------------

namespace {

void require_simple(const Graph& g, const std::string& who) {
  if (g.vertex_count < 1) throw ContractError(who + ": graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : g.edges) {
    if (a == b) throw ContractError(who + ": self-loops are not supported");
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count)
      throw ContractError(who + ": edge endpoint out of range");
    if (a > b) throw ContractError(who + ": edges must be normalized to a < b");
    if (!seen.insert({a, b}).second)
      throw ContractError(who + ": parallel edges are not supported");
  }
}

Alphabet vertex_alphabet(const Graph& g) {
  std::vector<std::string> tokens;
  tokens.reserve(static_cast<std::size_t>(g.vertex_count));
  for (int i = 0; i < g.vertex_count; ++i) tokens.push_back(std::to_string(i + 1));
  return Alphabet(std::move(tokens));
}

void check_validates(const Instance& instance, const Pattern& text,
                     const std::string& who) {
  const ValidationReport report = validate_superstring(instance, text);
  if (report.is_valid()) return;
  std::string detail = who + ": constructed witness fails validation (";
  detail += std::to_string(report.missing_positives.size()) + " missing positives";
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    detail += ", first violation at position " + std::to_string(v.position);
    detail += v.source == Violation::Source::Negative ? " by negative " : " by rule ";
    detail += std::to_string(v.index);
  }
  detail += ")";
  throw ContractError(detail);
}

}  // namespace

// --- vertex cover -> plain superstring --------------------------------------

ReductionArtifact vc_to_scs(const Graph& g) {
  require_simple(g, "vc_to_scs");
  std::vector<Pattern> positives;
  positives.reserve(2 * g.edges.size());
  for (const auto& [a, b] : g.edges) {
    positives.push_back(Pattern({a, b, a, b}));
    positives.push_back(Pattern({b, a, b, a}));
  }
  Certificate cert;
  cert.reduction = "vc-scs";
  cert.params = {{"vertices", g.vertex_count},
                 {"edges", static_cast<std::int64_t>(g.edges.size())}};
  cert.predicted_formula = "4*m + k";
  cert.normalization = 1;
  for (int i = 0; i < g.vertex_count; ++i)
    cert.token_map[std::to_string(i + 1)] = "vertex " + std::to_string(i + 1);
  return {Instance(vertex_alphabet(g), std::move(positives)), std::move(cert)};
}

Pattern vc_witness(const Graph& g, const std::vector<int>& cover) {
  require_simple(g, "vc_witness");
  for (int v : cover)
    if (v < 0 || v >= g.vertex_count)
      throw ContractError("vc_witness: cover vertex out of range");
  if (!is_vertex_cover(g, cover))
    throw ContractError("vc_witness: the given set is not a vertex cover");

  std::vector<bool> in_cover(static_cast<std::size_t>(g.vertex_count), false);
  for (int v : cover) in_cover[static_cast<std::size_t>(v)] = true;
  // Each edge is charged to its smaller covered endpoint; each charged
  // vertex contributes one hub cell plus four cells per charged edge.
  std::vector<std::vector<int>> charged(static_cast<std::size_t>(g.vertex_count));
  for (const auto& [a, b] : g.edges) {
    const int hub = in_cover[static_cast<std::size_t>(a)] ? a : b;
    const int other = hub == a ? b : a;
    charged[static_cast<std::size_t>(hub)].push_back(other);
  }
  std::vector<Cell> cells;
  for (int hub = 0; hub < g.vertex_count; ++hub) {
    const auto& others = charged[static_cast<std::size_t>(hub)];
    if (others.empty()) continue;
    cells.push_back(hub);
    for (int other : others) {
      cells.push_back(other);
      cells.push_back(hub);
      cells.push_back(other);
      cells.push_back(hub);
    }
  }
  Pattern witness(std::move(cells));
  check_validates(vc_to_scs(g).instance, witness, "vc_witness");
  return witness;
}

std::vector<int> scs_to_vc(const Graph& g, const Pattern& s) {
  const ReductionArtifact artifact = vc_to_scs(g);
  if (!validate_superstring(artifact.instance, s).is_valid())
    throw ExtractionError("scs_to_vc: string is not a valid superstring");
  std::vector<int> picked;
  for (const auto& [a, b] : g.edges) {
    if (!occurrences(Pattern({a, b, a, b, a}), s).empty()) {
      picked.push_back(a);
    } else if (!occurrences(Pattern({b, a, b, a, b}), s).empty()) {
      picked.push_back(b);
    } else {
      picked.push_back(a);
    }
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  return picked;
}

// --- graph coloring -> superstring with wildcards ---------------------------

namespace {

Alphabet dna_alphabet() { return Alphabet({"A", "T", "G", "C"}); }
constexpr Cell kA = 0;
constexpr Cell kT = 1;
constexpr Cell kG = 2;
constexpr Cell kC = 3;

// Separator shared by all coloring strings: a G block then a C block, each
// of length m*n, so it cannot arise by overlapping shorter pieces.
std::vector<Cell> coloring_separator(const Graph& g) {
  const std::size_t half = g.edges.size() * static_cast<std::size_t>(g.vertex_count);
  std::vector<Cell> cells(half, kG);
  cells.insert(cells.end(), half, kC);
  return cells;
}

// Edge profile of a vertex: one cell per edge, A when the vertex is the
// smaller endpoint, T when the larger, wildcard otherwise.
std::vector<Cell> edge_profile(const Graph& g, int vertex) {
  std::vector<Cell> cells(g.edges.size(), kWildcard);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (g.edges[k].first == vertex) cells[k] = kA;
    if (g.edges[k].second == vertex) cells[k] = kT;
  }
  return cells;
}

}  // namespace

ReductionArtifact coloring_to_scsw(const Graph& g) {
  require_simple(g, "coloring_to_scsw");
  const std::vector<Cell> sep = coloring_separator(g);
  std::vector<Pattern> positives;
  positives.reserve(static_cast<std::size_t>(g.vertex_count));
  for (int i = 0; i < g.vertex_count; ++i) {
    std::vector<Cell> cells = sep;
    const std::vector<Cell> profile = edge_profile(g, i);
    cells.insert(cells.end(), profile.begin(), profile.end());
    cells.insert(cells.end(), sep.begin(), sep.end());
    positives.push_back(Pattern(std::move(cells)));
  }
  const std::int64_t n = g.vertex_count;
  const std::int64_t m = static_cast<std::int64_t>(g.edges.size());
  Certificate cert;
  cert.reduction = "coloring-scsw";
  cert.params = {{"vertices", n}, {"edges", m}};
  cert.predicted_formula = "2*m*n + m*(2*n + 1)*k";
  cert.normalization = m * (2 * n + 1);
  cert.token_map = {{"A", "smaller-endpoint mark"},
                    {"T", "larger-endpoint mark"},
                    {"G", "separator, first half"},
                    {"C", "separator, second half"}};
  return {Instance(dna_alphabet(), std::move(positives)), std::move(cert)};
}

Pattern coloring_witness(const Graph& g, const std::vector<int>& assignment) {
  require_simple(g, "coloring_witness");
  if (assignment.size() != static_cast<std::size_t>(g.vertex_count))
    throw ContractError("coloring_witness: one color per vertex required");
  if (!is_proper_coloring(g, assignment))
    throw ContractError("coloring_witness: coloring is not proper");

  // Classes indexed by first appearance over ascending vertices.
  std::vector<int> class_of(assignment.size(), -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    int found = -1;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (assignment[static_cast<std::size_t>(classes[c].front())] == assignment[i]) {
        found = static_cast<int>(c);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    class_of[i] = found;
    classes[static_cast<std::size_t>(found)].push_back(static_cast<int>(i));
  }

  const std::vector<Cell> sep = coloring_separator(g);
  std::vector<Cell> cells = sep;
  for (const std::vector<int>& members : classes) {
    // Overlay of the members' edge profiles; a proper class never sets the
    // same edge cell to both A and T.
    std::vector<Cell> block(g.edges.size(), kWildcard);
    for (int vertex : members) {
      const std::vector<Cell> profile = edge_profile(g, vertex);
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (profile[k] == kWildcard) continue;
        if (block[k] != kWildcard && block[k] != profile[k])
          throw ContractError("coloring_witness: conflicting endpoint marks");
        block[k] = profile[k];
      }
    }
    for (Cell& c : block)
      if (c == kWildcard) c = kA;
    cells.insert(cells.end(), block.begin(), block.end());
    cells.insert(cells.end(), sep.begin(), sep.end());
  }
  Pattern witness(std::move(cells));
  check_validates(coloring_to_scsw(g).instance, witness, "coloring_witness");
  return witness;
}

std::vector<int> scsw_to_coloring(const Graph& g, const Pattern& s) {
  const ReductionArtifact artifact = coloring_to_scsw(g);
  if (!validate_superstring(artifact.instance, s).is_valid())
    throw ExtractionError("scsw_to_coloring: string is not a valid superstring");
  if (g.edges.empty()) return std::vector<int>(static_cast<std::size_t>(g.vertex_count), 0);

  const Pattern sep{coloring_separator(g)};
  const std::vector<std::size_t> hits = occurrences(sep, s);
  std::vector<std::size_t> selected;
  std::size_t next_free = 0;
  for (std::size_t pos : hits) {
    if (pos < next_free) continue;
    selected.push_back(pos);
    next_free = pos + sep.size();
  }
  if (selected.size() < 2)
    throw ExtractionError("scsw_to_coloring: fewer than two separator blocks");

  const std::int64_t m = static_cast<std::int64_t>(g.edges.size());
  const std::int64_t n = g.vertex_count;
  const std::int64_t block_bound =
      (static_cast<std::int64_t>(s.size()) - 2 * m * n) / (m * (2 * n + 1));
  if (static_cast<std::int64_t>(selected.size()) - 1 > block_bound)
    throw ExtractionError("scsw_to_coloring: more blocks than the length admits");

  std::vector<int> coloring(static_cast<std::size_t>(g.vertex_count), -1);
  for (int vertex = 0; vertex < g.vertex_count; ++vertex) {
    const Pattern profile{edge_profile(g, vertex)};
    for (std::size_t b = 0; b + 1 < selected.size() && coloring[vertex] < 0; ++b) {
      const std::size_t begin = selected[b] + sep.size();
      const std::size_t end = selected[b + 1];
      if (end < begin + profile.size()) continue;
      for (std::size_t off = begin; off + profile.size() <= end; ++off) {
        if (matches_at(profile, s, off)) {
          coloring[static_cast<std::size_t>(vertex)] = static_cast<int>(b);
          break;
        }
      }
    }
    if (coloring[static_cast<std::size_t>(vertex)] < 0)
      throw ExtractionError("scsw_to_coloring: vertex " + std::to_string(vertex + 1) +
                            " appears in no block");
  }
  if (!is_proper_coloring(g, coloring))
    throw ExtractionError("scsw_to_coloring: extracted coloring is not proper");
  return coloring;
}

// --- set cover -> superstring with forbidden substrings ----------------------

namespace {

// Token layout: items "1".."m", sets "c1".."cn", spacer head "l0", spacer
// cell "l", begin "b", end "e". Gadget-context wildcards range over
// everything except b and e; the frame and spacer rules use the full
// alphabet so b/e adjacency cheats stay forbidden.
struct SetCoverLayout {
  int m = 0;
  int n = 0;
  Alphabet alphabet;
  std::vector<Cell> gadget_choices;

  explicit SetCoverLayout(const SetCover& sc)
      : m(sc.item_count),
        n(static_cast<int>(sc.sets.size())),
        alphabet(make_tokens(sc)) {
    for (Cell c = 0; c < static_cast<Cell>(m + n + 2); ++c) gadget_choices.push_back(c);
  }

  static std::vector<std::string> make_tokens(const SetCover& sc) {
    const int m = sc.item_count;
    const int n = static_cast<int>(sc.sets.size());
    if (m < 1 || n < 1)
      throw ContractError("set cover reduction needs at least one item and one set");
    for (const auto& set : sc.sets) {
      for (std::size_t k = 0; k < set.size(); ++k) {
        if (set[k] < 0 || set[k] >= m)
          throw ContractError("set cover reduction: item out of range");
        if (k > 0 && set[k - 1] >= set[k])
          throw ContractError("set cover reduction: sets must be ascending");
      }
    }
    std::vector<bool> covered(static_cast<std::size_t>(m), false);
    for (const auto& set : sc.sets)
      for (int item : set) covered[static_cast<std::size_t>(item)] = true;
    for (bool c : covered)
      if (!c) throw ContractError("set cover reduction: an item is in no set");

    std::vector<std::string> tokens;
    for (int i = 0; i < m; ++i) tokens.push_back(std::to_string(i + 1));
    for (int j = 0; j < n; ++j) tokens.push_back("c" + std::to_string(j + 1));
    tokens.push_back("l0");
    tokens.push_back("l");
    tokens.push_back("b");
    tokens.push_back("e");
    return tokens;
  }

  Cell item(int i) const { return i; }
  Cell set(int j) const { return m + j; }
  Cell l0() const { return m + n; }
  Cell l() const { return m + n + 1; }
  Cell b() const { return m + n + 2; }
  Cell e() const { return m + n + 3; }
  int spacer_tail() const { return m * (3 * n + 2); }

  std::vector<Cell> triple(int i, int j) const {
    return {set(j), item(i), set(j)};
  }
  // `count` consecutive triples of item i starting at rotation j (sets wrap).
  std::vector<Cell> run(int i, int j, int count) const {
    std::vector<Cell> cells;
    cells.reserve(3 * static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
      const std::vector<Cell> tr = triple(i, (j + t) % n);
      cells.insert(cells.end(), tr.begin(), tr.end());
    }
    return cells;
  }
  std::vector<Cell> gadget(int i, int j) const { return run(i, j, n + 1); }

  bool member(int i, int j, const SetCover& sc) const {
    const auto& set = sc.sets[static_cast<std::size_t>(j)];
    return std::binary_search(set.begin(), set.end(), i);
  }
};

}  // namespace

ReductionArtifact setcover_to_scsn(const SetCover& sc) {
  const SetCoverLayout lay(sc);
  const AffixOptions frame_opts{{}, {}, {}};
  const AffixOptions gadget_opts{lay.gadget_choices, lay.b(), lay.e()};

  std::vector<Pattern> positives;
  for (int i = 0; i < lay.m; ++i) positives.push_back(Pattern({lay.item(i)}));
  positives.push_back(Pattern({lay.b()}));
  positives.push_back(Pattern({lay.e()}));

  // One concrete over-long run per item and rotation: a gadget may not be
  // extended by yet another triple.
  std::vector<Pattern> negatives;
  for (int i = 0; i < lay.m; ++i)
    for (int j = 0; j < lay.n; ++j) negatives.push_back(Pattern(lay.run(i, j, lay.n + 2)));

  std::vector<NegativeRule> rules;
  auto append = [&rules](std::vector<NegativeRule> batch) {
    for (NegativeRule& r : batch) rules.push_back(std::move(r));
  };

  // b only opens a string, e only closes one.
  append(affix_rules(Pattern({lay.b()}), 1, 0, {}, lay.alphabet, frame_opts));
  append(affix_rules(Pattern({lay.e()}), 0, 1, {}, lay.alphabet, frame_opts));

  // An item cell is only legal inside a triple of some set.
  for (int i = 0; i < lay.m; ++i) {
    std::vector<Pattern> allowed;
    for (int j = 0; j < lay.n; ++j) allowed.push_back(Pattern(lay.triple(i, j)));
    append(affix_rules(Pattern({lay.item(i)}), 1, 1, allowed, lay.alphabet, gadget_opts));
  }

  // A run of p consecutive triples must continue with the full neighbor
  // triple on one side; a lone triple of a set not containing the item has
  // no gadget boundary there, so it must continue on both sides.
  for (int i = 0; i < lay.m; ++i) {
    for (int j = 0; j < lay.n; ++j) {
      for (int p = 1; p <= lay.n; ++p) {
        const std::vector<Cell> run = lay.run(i, j, p);
        const std::vector<Cell> prev = lay.triple(i, (j + lay.n - 1) % lay.n);
        const std::vector<Cell> next = lay.triple(i, (j + p) % lay.n);
        std::vector<Pattern> allowed;
        if (p == 1 && !lay.member(i, j, sc)) {
          std::vector<Cell> both = prev;
          both.insert(both.end(), run.begin(), run.end());
          both.insert(both.end(), next.begin(), next.end());
          allowed.push_back(Pattern(std::move(both)));
        } else {
          std::vector<Cell> rightward(3, kWildcard);
          rightward.insert(rightward.end(), run.begin(), run.end());
          rightward.insert(rightward.end(), next.begin(), next.end());
          allowed.push_back(Pattern(std::move(rightward)));
          std::vector<Cell> leftward = prev;
          leftward.insert(leftward.end(), run.begin(), run.end());
          leftward.insert(leftward.end(), 3, kWildcard);
          allowed.push_back(Pattern(std::move(leftward)));
        }
        append(affix_rules(Pattern(run), 3, 3, allowed, lay.alphabet, gadget_opts));
      }
    }
  }

  // After a complete gadget: the next gadget's item (sharing one set cell),
  // a spacer, or the end of the string.
  for (int i = 0; i < lay.m; ++i) {
    for (int j = 0; j < lay.n; ++j) {
      const std::vector<Cell> gadget = lay.gadget(i, j);
      std::vector<Pattern> allowed;
      auto with_follower = [&gadget](Cell follower) {
        std::vector<Cell> cells = gadget;
        cells.push_back(follower);
        return Pattern(std::move(cells));
      };
      for (int i2 = 0; i2 < lay.m; ++i2) allowed.push_back(with_follower(lay.item(i2)));
      allowed.push_back(with_follower(lay.l0()));
      allowed.push_back(with_follower(lay.e()));
      append(affix_rules(Pattern(gadget), 0, 1, allowed, lay.alphabet, gadget_opts));
    }
  }

  // Spacers: l0 must be followed by a full tail of l cells.
  for (int q = 0; q < lay.spacer_tail(); ++q) {
    std::vector<Cell> head{lay.l0()};
    head.insert(head.end(), static_cast<std::size_t>(q), lay.l());
    std::vector<Cell> extended = head;
    extended.push_back(lay.l());
    append(affix_rules(Pattern(head), 0, 1, {Pattern(extended)}, lay.alphabet,
                       frame_opts));
  }

  Certificate cert;
  cert.reduction = "setcover-scsn";
  cert.params = {{"items", lay.m}, {"sets", lay.n}};
  cert.predicted_formula = "k*(2 + m*(3*n + 2)) + 1";
  cert.normalization = 2 + static_cast<std::int64_t>(lay.m) * (3 * lay.n + 2);
  for (int i = 0; i < lay.m; ++i)
    cert.token_map[std::to_string(i + 1)] = "item " + std::to_string(i + 1);
  for (int j = 0; j < lay.n; ++j)
    cert.token_map["c" + std::to_string(j + 1)] = "set " + std::to_string(j + 1);
  cert.token_map["l0"] = "spacer head";
  cert.token_map["l"] = "spacer cell";
  cert.token_map["b"] = "begin marker";
  cert.token_map["e"] = "end marker";
  cert.deviations = {
      "windows overhanging the string boundary are covered by begin/end-anchored "
      "rule variants",
      "a partial run may continue with a full neighbor triple on either side; "
      "only a lone triple of a non-containing set must continue on both",
      "runs longer than a gadget are excluded by one concrete forbidden string "
      "per item and rotation"};
  return {Instance(lay.alphabet, std::move(positives), std::move(negatives),
                   std::move(rules)),
          std::move(cert)};
}

Pattern setcover_witness(const SetCover& sc, const std::vector<int>& chosen_sets) {
  const SetCoverLayout lay(sc);
  std::vector<int> chosen = chosen_sets;
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int j : chosen)
    if (j < 0 || j >= lay.n)
      throw ContractError("setcover_witness: chosen set out of range");
  if (!covers_all_items(sc, chosen))
    throw ContractError("setcover_witness: chosen sets do not cover every item");

  // Each item rides in the lowest-index chosen set that contains it.
  std::vector<std::vector<int>> assigned(static_cast<std::size_t>(lay.n));
  for (int i = 0; i < lay.m; ++i) {
    for (int j : chosen) {
      if (lay.member(i, j, sc)) {
        assigned[static_cast<std::size_t>(j)].push_back(i);
        break;
      }
    }
  }

  std::vector<Cell> cells{lay.b()};
  bool first_chain = true;
  for (int j : chosen) {
    const std::vector<int>& items = assigned[static_cast<std::size_t>(j)];
    if (items.empty()) continue;
    if (!first_chain) {
      cells.push_back(lay.l0());
      cells.insert(cells.end(), static_cast<std::size_t>(lay.spacer_tail()), lay.l());
    }
    first_chain = false;
    // Consecutive gadgets of one chain share their boundary set cell.
    bool first_gadget = true;
    for (int i : items) {
      const std::vector<Cell> gadget = lay.gadget(i, j);
      cells.insert(cells.end(), gadget.begin() + (first_gadget ? 0 : 1), gadget.end());
      first_gadget = false;
    }
  }
  cells.push_back(lay.e());
  Pattern witness(std::move(cells));
  check_validates(setcover_to_scsn(sc).instance, witness, "setcover_witness");
  return witness;
}

std::vector<int> scsn_to_setcover(const SetCover& sc, const Pattern& s) {
  const SetCoverLayout lay(sc);
  const ReductionArtifact artifact = setcover_to_scsn(sc);
  if (!validate_superstring(artifact.instance, s).is_valid())
    throw ExtractionError("scsn_to_setcover: string is not a valid superstring");

  std::vector<int> chosen;
  for (int i = 0; i < lay.m; ++i) {
    std::size_t pos = s.size();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == lay.item(i)) {
        pos = k;
        break;
      }
    }
    if (pos == s.size() || pos == 0)
      throw ExtractionError("scsn_to_setcover: item " + std::to_string(i + 1) +
                            " has no guarded occurrence");
    const Cell before = s[pos - 1];
    const int j = static_cast<int>(before) - lay.m;
    if (j < 0 || j >= lay.n || !lay.member(i, j, sc))
      throw ExtractionError("scsn_to_setcover: item " + std::to_string(i + 1) +
                            " is not opened by a containing set");
    chosen.push_back(j);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (!covers_all_items(sc, chosen))
    throw ExtractionError("scsn_to_setcover: extracted sets do not cover");
  const std::int64_t bound = (static_cast<std::int64_t>(s.size()) - 1) /
                             (2 + static_cast<std::int64_t>(lay.m) * (3 * lay.n + 2));
  if (static_cast<std::int64_t>(chosen.size()) > bound)
    throw ExtractionError("scsn_to_setcover: more sets than the length admits");
  return chosen;
}

// --- minimum-ones 3SAT -> superstring with both features --------------------

namespace {

struct MinOnesLayout {
  int n = 0;

  explicit MinOnesLayout(const Cnf3& cnf) : n(cnf.variable_count) {
    if (n < 1) throw ContractError("min-ones reduction needs at least one variable");
    for (const Clause& clause : cnf.clauses)
      for (int lit : clause.literals)
        if (lit == 0 || lit < -n || lit > n)
          throw ContractError("min-ones reduction: literal out of range");
  }

  std::vector<Cell> guard() const { return {kG, kC}; }
  // Separator: a C block then a G block, each of length n.
  std::vector<Cell> separator() const {
    std::vector<Cell> cells(static_cast<std::size_t>(n), kC);
    cells.insert(cells.end(), static_cast<std::size_t>(n), kG);
    return cells;
  }
  std::vector<Cell> ruler() const {
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i) {
      cells.push_back(kG);
      cells.push_back(kA);
      cells.push_back(kC);
    }
    return cells;
  }
  std::vector<Cell> c_block() const {
    return std::vector<Cell>(static_cast<std::size_t>(n), kC);
  }
};

}  // namespace

ReductionArtifact minones_to_scsnw(const Cnf3& cnf) {
  const MinOnesLayout lay(cnf);
  const int n = lay.n;
  const std::vector<Cell> guard = lay.guard();
  const std::vector<Cell> sep = lay.separator();
  const std::vector<Cell> ruler = lay.ruler();
  const std::vector<Cell> c_block = lay.c_block();

  std::vector<Pattern> positives;
  {
    // Frame: guard, separator, one slot per variable, separator, ruler, C block.
    std::vector<Cell> cells = guard;
    cells.insert(cells.end(), sep.begin(), sep.end());
    cells.insert(cells.end(), static_cast<std::size_t>(n), kWildcard);
    cells.insert(cells.end(), sep.begin(), sep.end());
    cells.insert(cells.end(), ruler.begin(), ruler.end());
    cells.insert(cells.end(), c_block.begin(), c_block.end());
    positives.push_back(Pattern(std::move(cells)));
  }
  for (int i = 1; i <= n; ++i) {
    // Variable string: separator, then an A at slot i, then a C block.
    std::vector<Cell> cells = sep;
    cells.insert(cells.end(), static_cast<std::size_t>(i - 1), kWildcard);
    cells.push_back(kA);
    cells.insert(cells.end(), static_cast<std::size_t>(n - i), kWildcard);
    cells.insert(cells.end(), c_block.begin(), c_block.end());
    positives.push_back(Pattern(std::move(cells)));
  }

  std::vector<Pattern> negatives;
  // The guard pair may never have a predecessor: it pins the frame to the
  // front of every valid string.
  negatives.push_back(Pattern({kWildcard, kG, kC}));
  // Slots hold A or T only.
  for (int i = 1; i <= n; ++i) {
    for (Cell banned : {kC, kG}) {
      std::vector<Cell> cells = guard;
      cells.insert(cells.end(), sep.begin(), sep.end());
      cells.insert(cells.end(), static_cast<std::size_t>(i - 1), kWildcard);
      cells.push_back(banned);
      cells.insert(cells.end(), static_cast<std::size_t>(n - i), kWildcard);
      cells.insert(cells.end(), sep.begin(), sep.end());
      negatives.push_back(Pattern(std::move(cells)));
    }
  }
  // After the ruler, no two A cells may sit within distance n of each other
  // in the window that hosts the variable chunks.
  const int window = 3 * n * n + n;
  for (int i = 1; i <= 3 * n * n; ++i) {
    for (int j = i + 1; j <= i + n; ++j) {
      std::vector<Cell> cells = ruler;
      cells.insert(cells.end(), static_cast<std::size_t>(window), kWildcard);
      cells[ruler.size() + static_cast<std::size_t>(i - 1)] = kA;
      cells[ruler.size() + static_cast<std::size_t>(j - 1)] = kA;
      negatives.push_back(Pattern(std::move(cells)));
    }
  }
  // One forbidden slot pattern per clause: the assignment falsifying it.
  for (const Clause& clause : cnf.clauses) {
    std::vector<Cell> slots(static_cast<std::size_t>(n), kWildcard);
    bool tautological = false;
    for (int lit : clause.literals) {
      const std::size_t idx = static_cast<std::size_t>(std::abs(lit) - 1);
      const Cell falsifying = lit > 0 ? kA : kT;
      if (slots[idx] != kWildcard && slots[idx] != falsifying) tautological = true;
      slots[idx] = falsifying;
    }
    if (tautological) continue;
    std::vector<Cell> cells = guard;
    cells.insert(cells.end(), sep.begin(), sep.end());
    cells.insert(cells.end(), slots.begin(), slots.end());
    negatives.push_back(Pattern(std::move(cells)));
  }

  Certificate cert;
  cert.reduction = "minones-scsnw";
  cert.params = {{"variables", n},
                 {"clauses", static_cast<std::int64_t>(cnf.clauses.size())}};
  cert.predicted_formula = "2 + 9*n + 3*n*W";
  cert.normalization = n;
  cert.token_map = {{"A", "false mark / chunk anchor"},
                    {"T", "true mark"},
                    {"G", "guard and separator cell"},
                    {"C", "guard and separator cell"}};
  cert.deviations = {
      "frame and variable strings end with a C block rather than a further "
      "separator",
      "A-pair prohibitions range over gaps of one through n cells",
      "clauses with complementary literals contribute no forbidden string"};
  return {Instance(dna_alphabet(), std::move(positives), std::move(negatives)),
          std::move(cert)};
}

Pattern minones_witness(const Cnf3& cnf, const std::vector<bool>& assignment) {
  const MinOnesLayout lay(cnf);
  const int n = lay.n;
  if (assignment.size() != static_cast<std::size_t>(n))
    throw ContractError("minones_witness: one value per variable required");
  if (!satisfies(cnf, assignment))
    throw ContractError("minones_witness: assignment does not satisfy the formula");

  const std::vector<Cell> sep = lay.separator();
  std::vector<Cell> cells = lay.guard();
  cells.insert(cells.end(), sep.begin(), sep.end());
  for (int i = 0; i < n; ++i)
    cells.push_back(assignment[static_cast<std::size_t>(i)] ? kT : kA);
  cells.insert(cells.end(), sep.begin(), sep.end());
  const std::vector<Cell> ruler = lay.ruler();
  cells.insert(cells.end(), ruler.begin(), ruler.end());
  cells.insert(cells.end(), static_cast<std::size_t>(n), kC);
  // One chunk per true variable: its G block, T slots with a single A at
  // the variable's position, then its C block. Neighboring chunks chain
  // through the shared C/G blocks to re-create each separator.
  for (int i = 1; i <= n; ++i) {
    if (!assignment[static_cast<std::size_t>(i - 1)]) continue;
    cells.insert(cells.end(), static_cast<std::size_t>(n), kG);
    for (int k = 1; k <= n; ++k) cells.push_back(k == i ? kA : kT);
    cells.insert(cells.end(), static_cast<std::size_t>(n), kC);
  }
  Pattern witness(std::move(cells));
  check_validates(minones_to_scsnw(cnf).instance, witness, "minones_witness");
  return witness;
}

std::vector<bool> scsnw_to_assignment(const Cnf3& cnf, const Pattern& s) {
  const MinOnesLayout lay(cnf);
  const int n = lay.n;
  const ReductionArtifact artifact = minones_to_scsnw(cnf);
  if (!validate_superstring(artifact.instance, s).is_valid())
    throw ExtractionError("scsnw_to_assignment: string is not a valid superstring");

  std::vector<Cell> frame = lay.guard();
  const std::vector<Cell> sep = lay.separator();
  frame.insert(frame.end(), sep.begin(), sep.end());
  const std::size_t slot_base = frame.size();
  frame.insert(frame.end(), static_cast<std::size_t>(n), kWildcard);
  frame.insert(frame.end(), sep.begin(), sep.end());
  const std::vector<Cell> ruler = lay.ruler();
  frame.insert(frame.end(), ruler.begin(), ruler.end());
  const Pattern frame_pattern{std::move(frame)};
  if (s.size() < frame_pattern.size() || !matches_at(frame_pattern, s, 0))
    throw ExtractionError("scsnw_to_assignment: frame not locatable at the front");

  std::vector<bool> assignment;
  for (int i = 0; i < n; ++i) {
    const Cell slot = s[slot_base + static_cast<std::size_t>(i)];
    if (slot != kA && slot != kT)
      throw ExtractionError("scsnw_to_assignment: slot holds no truth mark");
    assignment.push_back(slot == kT);
  }
  const std::int64_t weight =
      static_cast<std::int64_t>(assignment_weight(assignment));
  if (static_cast<std::int64_t>(s.size()) < 2 + 9 * n + 3 * n * weight)
    throw ExtractionError("scsnw_to_assignment: weight exceeds the length budget");
  if (!satisfies(cnf, assignment))
    throw ExtractionError("scsnw_to_assignment: extracted assignment unsatisfying");
  return assignment;
}

}  // namespace scs
