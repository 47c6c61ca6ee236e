#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scs {

// A cell is one position of a token string: an index into an Alphabet,
// or kWildcard for a position that matches any token.
using Cell = std::int32_t;

inline constexpr Cell kWildcard = -1;
inline constexpr const char* kWildcardToken = "?";

// An ordered set of distinct symbol tokens. Creation order is the
// lexicographic order used everywhere (cells compare by index).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }

  const std::string& token(Cell c) const;
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Index of `token`, or nullopt if absent (or the wildcard token).
  std::optional<Cell> find(const std::string& token) const;

  bool valid_cell(Cell c) const {
    return c >= 0 && static_cast<std::size_t>(c) < tokens_.size();
  }

  std::vector<Cell> all_cells() const;

  // True when every token is a single character; enables compact rendering.
  bool single_char_tokens() const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
};

}  // namespace scs
