#pragma once

#include <cstdint>

#include "scs/engine.hpp"
#include "scs/instance.hpp"

namespace scs {

// Exact subset dynamic program over merge orders (Held-Karp style) for
// unconstrained wildcard-free instances. Requires variant() == Scs and at
// most `piece_cap` positives after substring removal. The returned text is
// a valid optimum but not necessarily the lexicographically least one.
SolveOutcome solve_exact_dp(const Instance& instance, std::size_t piece_cap = 16);

// Pairwise largest-overlap merging (skipping merges that are certainly
// forbidden), then a shortest feasible arrangement of the remaining pieces
// with separator padding. Works on every variant; result is Feasible, not
// proven optimal. Throws HeuristicError when no arrangement is found.
SolveOutcome solve_greedy(const Instance& instance, const SearchLimits& limits = {});

// Group-merge heuristic: each round grows one chain of pieces (best
// overlap, either side), keeps the chain prefix with the best compression
// ratio, and replaces those pieces by the chain. Requires a wildcard-free
// instance (variant Scs or Scsn). Finishes like solve_greedy.
SolveOutcome solve_group_merge(const Instance& instance,
                               const SearchLimits& limits = {});

// True when every completion of `piece` contains some forbidden substring,
// judged window by window (exact for a single window, used as a merge
// filter by the heuristics).
bool certain_violation(const Pattern& piece, const Instance& instance);

// Shortest string that spells every piece contiguously (pieces may be
// reordered and separated by arbitrary padding; piece wildcards may take
// any token), subject to the instance's forbidden substrings. Breadth-
// first and exact for that restricted shape. Throws HeuristicError when
// limits trip or no arrangement exists.
Pattern assemble_pieces(const std::vector<Pattern>& pieces,
                        const Instance& instance, const SearchLimits& limits);

// Drops every positive subsumed by another (for duplicates the earliest
// stays), returning surviving indices in order.
std::vector<std::size_t> subsumption_survivors(const std::vector<Pattern>& positives);

}  // namespace scs
