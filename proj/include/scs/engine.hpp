#pragma once

#include <cstdint>
#include <string>

#include "scs/instance.hpp"

namespace scs {

struct SearchLimits {
  std::size_t max_length = 4096;
  std::uint64_t max_states = 1'000'000;
  std::uint64_t max_memory_bytes = 0;  // 0 = unlimited; approximate accounting
};

struct FrontierStats {
  std::uint64_t states_stored = 0;
  std::uint64_t states_expanded = 0;
  std::uint64_t max_frontier = 0;
  std::size_t layers = 0;  // length of the deepest completed layer
};

struct SolveOutcome {
  enum class Kind { Optimal, Feasible, Infeasible, LimitExceeded };
  Kind kind = Kind::Infeasible;
  Pattern text;
  std::size_t length = 0;
  std::string limit_name;  // set for LimitExceeded
  FrontierStats stats;
};

// Exhaustive shortest-feasible-superstring search: breadth-first over
// (constraint-tracker state, per-positive prefix masks, completion set),
// one layer per output cell, tokens tried in ascending order so the first
// goal reached is the lexicographically least optimum. Exhausting the
// frontier proves infeasibility (the state space is finite).
SolveOutcome shortest_superstring(const Instance& instance,
                                  const SearchLimits& limits = {});

// Saturating product bound on the reachable search-state count.
std::uint64_t feasibility_bound(const Instance& instance);

}  // namespace scs
