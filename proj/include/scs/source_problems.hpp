#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace scs {

// Simple undirected graph. Vertices are 0-based internally (1-based in
// files and CLI output). Edges are normalized to a < b; file order is
// preserved and defines the edge indexing used by reductions.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Items are 0-based internally (1-based in files). sets[j] lists the items
// of set j in ascending order.
struct SetCover {
  int item_count = 0;
  std::vector<std::vector<int>> sets;
};

// Three signed 1-based variable indices (DIMACS convention, repeats allowed).
struct Clause {
  std::array<int, 3> literals{};
};

struct Cnf3 {
  int variable_count = 0;
  std::vector<Clause> clauses;
};

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover);
bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment);
bool covers_all_items(const SetCover& sc, const std::vector<int>& chosen_sets);
bool satisfies(const Cnf3& cnf, const std::vector<bool>& assignment);
std::size_t assignment_weight(const std::vector<bool>& assignment);

// Exhaustive oracles. Each returns the lexicographically least witness of
// optimal cost (subsets enumerated in size-then-lex order; colorings by
// backtracking with ascending color choice).
struct CoverResult {
  std::size_t size = 0;
  std::vector<int> vertices;
};
CoverResult min_vertex_cover(const Graph& g);

struct ColoringResult {
  int colors = 0;
  std::vector<int> assignment;
};
ColoringResult chromatic_number(const Graph& g);

struct SetCoverResult {
  bool feasible = false;
  std::size_t size = 0;
  std::vector<int> sets;
};
SetCoverResult min_set_cover(const SetCover& sc);

struct MinOnesResult {
  bool satisfiable = false;
  std::size_t weight = 0;
  std::vector<bool> assignment;
};
MinOnesResult min_ones_3sat(const Cnf3& cnf);

// Deterministic pseudo-random stream (the engine and all derived draws are
// pinned by the standard, so seeds reproduce identical instances anywhere).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

Graph generate_graph(int vertices, double edge_prob, std::uint64_t seed);
// Every item is guaranteed covered (uncovered items are assigned to a
// uniformly chosen set afterwards).
SetCover generate_set_cover(int items, int sets, double membership_prob,
                            std::uint64_t seed);
Cnf3 generate_cnf3(int variables, int clauses, std::uint64_t seed);

// File formats: graphs use DIMACS-like "p edge n m" + "e u v" lines,
// CNF uses DIMACS "p cnf n m" + clause lines, set covers use JSON
// {"items": m, "sets": [[...1-based...], ...]}.
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);
SetCover read_set_cover(const std::string& text);
std::string write_set_cover(const SetCover& sc);
Cnf3 read_cnf3(const std::string& text);
std::string write_cnf3(const Cnf3& cnf);

}  // namespace scs
