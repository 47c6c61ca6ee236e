#include "scs/alphabet.hpp"

#include <unordered_set>

#include "scs/errors.hpp"

namespace scs {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw ContractError("alphabet must contain a token");
  std::unordered_set<std::string> seen;
  for (const auto& t : tokens_) {
    if (t.empty()) throw ContractError("alphabet token must be non-empty");
    if (t == kWildcardToken)
      throw ContractError("alphabet must not contain the wildcard token");
    if (!seen.insert(t).second)
      throw ContractError("alphabet tokens must be distinct: " + t);
  }
}

const std::string& Alphabet::token(Cell c) const {
  if (!valid_cell(c)) throw ContractError("cell out of alphabet range");
  return tokens_[static_cast<std::size_t>(c)];
}

std::optional<Cell> Alphabet::find(const std::string& token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == token) return static_cast<Cell>(i);
  return std::nullopt;
}

std::vector<Cell> Alphabet::all_cells() const {
  std::vector<Cell> cells(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) cells[i] = static_cast<Cell>(i);
  return cells;
}

bool Alphabet::single_char_tokens() const {
  for (const auto& t : tokens_)
    if (t.size() != 1) return false;
  return true;
}

}  // namespace scs
