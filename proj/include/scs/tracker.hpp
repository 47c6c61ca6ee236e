#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scs/instance.hpp"

namespace scs {

// A live partial match of one tracked rule: `age` cells of its pattern
// have matched the tail of the emitted text; `exceptions_alive` holds the
// exceptions still cellwise-consistent with those cells.
struct TrackerWindow {
  std::uint32_t rule_id = 0;
  std::uint32_t age = 0;
  std::uint64_t exceptions_alive = 0;
  auto operator<=>(const TrackerWindow&) const = default;
};

struct TrackerState {
  std::int32_t node = 0;                // Aho-Corasick DFA node
  std::vector<TrackerWindow> windows;   // sorted, deduplicated
  bool operator==(const TrackerState&) const = default;
};

// Feeds candidate superstrings cell by cell and reports the first moment a
// forbidden substring (plain negative or unexcepted rule completion)
// appears. Wildcard-free negatives run through a dense Aho-Corasick DFA;
// wildcarded negatives and rules run as sliding windows.
class NegativeTracker {
 public:
  explicit NegativeTracker(const Instance& instance);

  TrackerState initial() const { return TrackerState{}; }

  // True when even the empty string is forbidden (an empty negative).
  bool initially_violated() const { return terminal_[0]; }

  // One cell of progress; nullopt means a violation just completed.
  std::optional<TrackerState> advance(const TrackerState& state, Cell token) const;

  std::size_t automaton_nodes() const { return terminal_.size(); }

  // Saturating upper bound on distinct tracker states: DFA nodes times,
  // per tracked rule, (1 + 2^exceptions) per live age slot.
  std::uint64_t state_bound() const;

  // Appends a byte-exact encoding of `state` (for hashing/deduplication).
  void append_bytes(const TrackerState& state, std::string& out) const;

 private:
  struct TrackedRule {
    Pattern pattern;
    std::vector<Pattern> exceptions;
    std::vector<Cell> choices;
  };

  std::size_t sigma_ = 0;
  std::vector<std::int32_t> next_;  // dense DFA transitions, node*sigma_+cell
  std::vector<char> terminal_;
  std::vector<TrackedRule> tracked_;
};

}  // namespace scs
