#include "scs/source_problems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "scs/errors.hpp"

namespace scs {

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.vertex_count) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (const auto& [a, b] : g.edges)
    if (!in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(b)])
      return false;
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(g.vertex_count)) return false;
  for (const auto& [a, b] : g.edges)
    if (assignment[static_cast<std::size_t>(a)] ==
        assignment[static_cast<std::size_t>(b)])
      return false;
  return true;
}

bool covers_all_items(const SetCover& sc, const std::vector<int>& chosen_sets) {
  std::vector<char> covered(static_cast<std::size_t>(sc.item_count), 0);
  for (int s : chosen_sets) {
    if (s < 0 || static_cast<std::size_t>(s) >= sc.sets.size()) return false;
    for (int item : sc.sets[static_cast<std::size_t>(s)])
      covered[static_cast<std::size_t>(item)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool satisfies(const Cnf3& cnf, const std::vector<bool>& assignment) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause.literals) {
      const std::size_t var = static_cast<std::size_t>(std::abs(lit)) - 1;
      if (assignment[var] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::size_t assignment_weight(const std::vector<bool>& assignment) {
  return static_cast<std::size_t>(
      std::count(assignment.begin(), assignment.end(), true));
}

namespace {

// Size-ascending, lexicographic subset enumeration; `accept` sees 0-based
// member lists. Returns the first accepted subset.
template <typename Accept>
std::pair<bool, std::vector<int>> first_subset(int universe, Accept accept) {
  for (int k = 0; k <= universe; ++k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (accept(combo)) return {true, combo};
      // next combination in lex order
      int i = k - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == universe - k + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {false, {}};
}

}  // namespace

CoverResult min_vertex_cover(const Graph& g) {
  if (g.vertex_count > 20)
    throw ContractError("vertex-cover oracle supports at most 20 vertices");
  auto [found, combo] = first_subset(
      g.vertex_count, [&](const std::vector<int>& c) { return is_vertex_cover(g, c); });
  // The full vertex set always covers, so found is always true.
  (void)found;
  return CoverResult{combo.size(), combo};
}

ColoringResult chromatic_number(const Graph& g) {
  if (g.vertex_count > 10)
    throw ContractError("coloring oracle supports at most 10 vertices");
  if (g.vertex_count == 0) return ColoringResult{0, {}};

  const std::size_t n = static_cast<std::size_t>(g.vertex_count);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  std::vector<int> colors(n, -1);
  // Ascending color choice per vertex yields the lexicographically least
  // proper assignment among those using at most k colors.
  auto backtrack = [&](auto&& self, std::size_t v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : adj[v])
        if (colors[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colors[v] = c;
      if (self(self, v + 1, k)) return true;
      colors[v] = -1;
    }
    return false;
  };

  for (int k = 1; k <= g.vertex_count; ++k) {
    std::fill(colors.begin(), colors.end(), -1);
    if (backtrack(backtrack, 0, k)) return ColoringResult{k, colors};
  }
  // Unreachable: n colors always suffice.
  throw ContractError("coloring search failed unexpectedly");
}

SetCoverResult min_set_cover(const SetCover& sc) {
  if (sc.sets.size() > 15)
    throw ContractError("set-cover oracle supports at most 15 sets");
  auto [found, combo] =
      first_subset(static_cast<int>(sc.sets.size()),
                   [&](const std::vector<int>& c) { return covers_all_items(sc, c); });
  if (!found) return SetCoverResult{false, 0, {}};
  return SetCoverResult{true, combo.size(), combo};
}

MinOnesResult min_ones_3sat(const Cnf3& cnf) {
  if (cnf.variable_count > 20)
    throw ContractError("3SAT oracle supports at most 20 variables");
  auto [found, combo] = first_subset(cnf.variable_count, [&](const std::vector<int>& c) {
    std::vector<bool> a(static_cast<std::size_t>(cnf.variable_count), false);
    for (int v : c) a[static_cast<std::size_t>(v)] = true;
    return satisfies(cnf, a);
  });
  if (!found) return MinOnesResult{false, 0, {}};
  std::vector<bool> a(static_cast<std::size_t>(cnf.variable_count), false);
  for (int v : combo) a[static_cast<std::size_t>(v)] = true;
  return MinOnesResult{true, combo.size(), a};
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw ContractError("below(0) is undefined");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

bool RandomSource::bernoulli(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

Graph generate_graph(int vertices, double edge_prob, std::uint64_t seed) {
  if (vertices < 0) throw ContractError("vertex count must be non-negative");
  RandomSource rng(seed);
  Graph g;
  g.vertex_count = vertices;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b)
      if (rng.bernoulli(edge_prob)) g.edges.emplace_back(a, b);
  return g;
}

SetCover generate_set_cover(int items, int sets, double membership_prob,
                            std::uint64_t seed) {
  if (items < 1 || sets < 1)
    throw ContractError("set-cover generation needs at least one item and one set");
  RandomSource rng(seed);
  SetCover sc;
  sc.item_count = items;
  sc.sets.assign(static_cast<std::size_t>(sets), {});
  for (int j = 0; j < sets; ++j)
    for (int i = 0; i < items; ++i)
      if (rng.bernoulli(membership_prob)) sc.sets[static_cast<std::size_t>(j)].push_back(i);
  for (int i = 0; i < items; ++i) {
    bool covered = false;
    for (const auto& s : sc.sets)
      if (std::find(s.begin(), s.end(), i) != s.end()) covered = true;
    if (!covered) {
      auto& s = sc.sets[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(sets)))];
      s.insert(std::upper_bound(s.begin(), s.end(), i), i);
    }
  }
  return sc;
}

Cnf3 generate_cnf3(int variables, int clauses, std::uint64_t seed) {
  if (variables < 1) throw ContractError("CNF generation needs at least one variable");
  RandomSource rng(seed);
  Cnf3 cnf;
  cnf.variable_count = variables;
  for (int c = 0; c < clauses; ++c) {
    Clause clause;
    for (int t = 0; t < 3; ++t) {
      const std::uint64_t pick = rng.below(2 * static_cast<std::uint64_t>(variables));
      const int var = static_cast<int>(pick / 2) + 1;
      clause.literals[static_cast<std::size_t>(t)] = (pick % 2 == 0) ? var : -var;
    }
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

Graph read_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  bool have_header = false;
  std::size_t expected_edges = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        throw ParseError("graph header must be \"p edge <vertices> <edges>\"");
      g.vertex_count = static_cast<int>(n);
      expected_edges = static_cast<std::size_t>(m);
      have_header = true;
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError("edge line must be \"e <u> <v>\"");
      if (!have_header) throw ParseError("edge line before graph header");
      if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count)
        throw ParseError("edge endpoint out of range");
      if (u == v) throw ParseError("self-loops are not supported");
      int a = static_cast<int>(u) - 1;
      int b = static_cast<int>(v) - 1;
      if (a > b) std::swap(a, b);
      g.edges.emplace_back(a, b);
    } else {
      throw ParseError("unrecognized graph line tag: " + tag);
    }
  }
  if (!have_header) throw ParseError("missing graph header");
  if (g.edges.size() != expected_edges)
    throw ParseError("edge count does not match the header");
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count << " " << g.edges.size() << "\n";
  for (const auto& [a, b] : g.edges) out << "e " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

SetCover read_set_cover(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid set-cover JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("items") || !j.contains("sets") ||
      !j["items"].is_number_integer() || !j["sets"].is_array())
    throw ParseError("set-cover JSON needs integer \"items\" and array \"sets\"");
  SetCover sc;
  sc.item_count = j["items"].get<int>();
  if (sc.item_count < 0) throw ParseError("item count must be non-negative");
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) throw ParseError("each set must be an array of items");
    std::vector<int> items;
    for (const auto& e : s) {
      if (!e.is_number_integer()) throw ParseError("set members must be integers");
      const int item = e.get<int>();
      if (item < 1 || item > sc.item_count)
        throw ParseError("set member out of item range");
      items.push_back(item - 1);
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    sc.sets.push_back(std::move(items));
  }
  return sc;
}

std::string write_set_cover(const SetCover& sc) {
  nlohmann::ordered_json j;
  j["items"] = sc.item_count;
  j["sets"] = nlohmann::ordered_json::array();
  for (const auto& s : sc.sets) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int item : s) arr.push_back(item + 1);
    j["sets"].push_back(std::move(arr));
  }
  return j.dump(2) + "\n";
}

Cnf3 read_cnf3(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf3 cnf;
  bool have_header = false;
  std::size_t expected_clauses = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "p") {
      std::string kind;
      long long n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
        throw ParseError("CNF header must be \"p cnf <vars> <clauses>\"");
      cnf.variable_count = static_cast<int>(n);
      expected_clauses = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause line before CNF header");
    std::vector<int> lits;
    long long lit = 0;
    std::istringstream cs(line);
    while (cs >> lit && lit != 0) lits.push_back(static_cast<int>(lit));
    if (lits.size() != 3)
      throw ParseError("every clause must have exactly 3 literals");
    Clause clause;
    for (std::size_t t = 0; t < 3; ++t) {
      if (lits[t] == 0 || std::abs(lits[t]) > cnf.variable_count)
        throw ParseError("literal out of variable range");
      clause.literals[t] = lits[t];
    }
    cnf.clauses.push_back(clause);
  }
  if (!have_header) throw ParseError("missing CNF header");
  if (cnf.clauses.size() != expected_clauses)
    throw ParseError("clause count does not match the header");
  return cnf;
}

std::string write_cnf3(const Cnf3& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variable_count << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    out << clause.literals[0] << " " << clause.literals[1] << " "
        << clause.literals[2] << " 0\n";
  }
  return out.str();
}

}  // namespace scs
