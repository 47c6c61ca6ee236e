#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scs/alphabet.hpp"

namespace scs {

// A token string with optional wildcard positions. Patterns with no
// wildcards ("texts") double as candidate superstrings and plain strings.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  static Pattern from_tokens(const std::vector<std::string>& tokens,
                             const Alphabet& alphabet);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  Cell operator[](std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::vector<Cell>& cells() { return cells_; }

  bool is_text() const;
  std::size_t wildcard_count() const;

  // Tokens joined with "·" when the alphabet has multi-char tokens,
  // concatenated otherwise. Wildcards render as "?".
  std::string render(const Alphabet& alphabet) const;
  std::vector<std::string> to_tokens(const Alphabet& alphabet) const;

  bool operator==(const Pattern& other) const { return cells_ == other.cells_; }
  bool operator!=(const Pattern& other) const { return cells_ != other.cells_; }
  // Lexicographic; wildcard cells order before every concrete cell.
  bool operator<(const Pattern& other) const { return cells_ < other.cells_; }

 private:
  std::vector<Cell> cells_;
};

// Whether pattern `p` matches text `t` at offset `i` (p's wildcards match
// anything; t must be wildcard-free at compared positions for a concrete
// match to be meaningful, so callers pass texts). Throws std::out_of_range
// when i + |p| > |t|.
bool matches_at(const Pattern& p, const Pattern& t, std::size_t i);

// All offsets where `p` matches inside `t`.
std::vector<std::size_t> occurrences(const Pattern& p, const Pattern& t);

struct MergeResult {
  std::size_t overlap = 0;
  Pattern merged;
};

// Largest-overlap merge of `left` followed by `right`: the longest suffix
// of `left` compatible cellwise with a prefix of `right` (cells compatible
// when equal or either is a wildcard; the merged cell keeps the concrete
// one). Overlap 0 yields plain concatenation.
MergeResult best_merge(const Pattern& left, const Pattern& right);

// Every wildcard-free completion of `p`, substituting cells from `choices`
// (ascending). Results are sorted lexicographically: the first wildcard is
// the most significant digit of the odometer. Throws SizeGuardError when
// the count would exceed `cap`.
std::vector<Pattern> expansions(const Pattern& p, std::span<const Cell> choices,
                                std::uint64_t cap);
std::vector<Pattern> expansions(const Pattern& p, const Alphabet& alphabet,
                                std::uint64_t cap);

// Whether `inner` placed at `pos` is implied by `outer`: every cell of
// `inner` is a wildcard or equals outer's cell there. An outer wildcard
// under a concrete inner cell is NOT subsumption.
bool subsumes_at(const Pattern& inner, const Pattern& outer, std::size_t pos);

// Whether `inner` is subsumed by `outer` at some offset.
bool is_subsumed(const Pattern& inner, const Pattern& outer);

}  // namespace scs
