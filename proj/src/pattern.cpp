#include "scs/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "scs/errors.hpp"

namespace scs {

Pattern Pattern::from_tokens(const std::vector<std::string>& tokens,
                             const Alphabet& alphabet) {
  std::vector<Cell> cells;
  cells.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (tok == kWildcardToken) {
      cells.push_back(kWildcard);
    } else if (auto c = alphabet.find(tok)) {
      cells.push_back(*c);
    } else {
      throw ParseError("token not in alphabet: " + tok);
    }
  }
  return Pattern(std::move(cells));
}

bool Pattern::is_text() const {
  return std::none_of(cells_.begin(), cells_.end(),
                      [](Cell c) { return c == kWildcard; });
}

std::size_t Pattern::wildcard_count() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), kWildcard));
}

std::string Pattern::render(const Alphabet& alphabet) const {
  const bool compact = alphabet.single_char_tokens();
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!compact && i > 0) out += "·";
    out += cells_[i] == kWildcard ? kWildcardToken : alphabet.token(cells_[i]);
  }
  return out;
}

std::vector<std::string> Pattern::to_tokens(const Alphabet& alphabet) const {
  std::vector<std::string> out;
  out.reserve(cells_.size());
  for (Cell c : cells_)
    out.push_back(c == kWildcard ? kWildcardToken : alphabet.token(c));
  return out;
}

bool matches_at(const Pattern& p, const Pattern& t, std::size_t i) {
  if (i + p.size() > t.size())
    throw std::out_of_range("pattern match window exceeds text");
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Cell pc = p[j];
    if (pc != kWildcard && pc != t[i + j]) return false;
  }
  return true;
}

std::vector<std::size_t> occurrences(const Pattern& p, const Pattern& t) {
  std::vector<std::size_t> out;
  if (p.size() > t.size()) return out;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i)
    if (matches_at(p, t, i)) out.push_back(i);
  return out;
}

namespace {

bool cells_compatible(Cell a, Cell b) {
  return a == kWildcard || b == kWildcard || a == b;
}

Cell merge_cells(Cell a, Cell b) { return a == kWildcard ? b : a; }

}  // namespace

MergeResult best_merge(const Pattern& left, const Pattern& right) {
  const std::size_t max_k = std::min(left.size(), right.size());
  std::size_t best = 0;
  for (std::size_t k = max_k; k >= 1; --k) {
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (!cells_compatible(left[left.size() - k + j], right[j])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = k;
      break;
    }
  }
  std::vector<Cell> merged;
  merged.reserve(left.size() + right.size() - best);
  for (std::size_t i = 0; i < left.size() - best; ++i) merged.push_back(left[i]);
  for (std::size_t j = 0; j < best; ++j)
    merged.push_back(merge_cells(left[left.size() - best + j], right[j]));
  for (std::size_t j = best; j < right.size(); ++j) merged.push_back(right[j]);
  return MergeResult{best, Pattern(std::move(merged))};
}

std::vector<Pattern> expansions(const Pattern& p, std::span<const Cell> choices,
                                std::uint64_t cap) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == kWildcard) slots.push_back(i);

  if (choices.empty() && !slots.empty())
    throw ContractError("cannot expand wildcards over an empty choice set");

  std::uint64_t count = 1;
  const std::uint64_t base = std::max<std::uint64_t>(choices.size(), 1);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    // count * base > cap, checked without overflow.
    if (count > cap / base) throw SizeGuardError("expansion count exceeds the budget");
    count *= base;
  }
  if (count > cap) throw SizeGuardError("expansion count exceeds the budget");

  std::vector<Pattern> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Cell> work = p.cells();
  std::vector<std::size_t> odometer(slots.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s)
      work[slots[s]] = choices[odometer[s]];
    out.emplace_back(work);
    // Advance the odometer; the first wildcard is the most significant
    // digit so the output comes out in lexicographic order.
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++odometer[s] < choices.size()) break;
      odometer[s] = 0;
      if (s == 0) return out;
    }
    if (slots.empty()) break;
  }
  return out;
}

std::vector<Pattern> expansions(const Pattern& p, const Alphabet& alphabet,
                                std::uint64_t cap) {
  const std::vector<Cell> cells = alphabet.all_cells();
  return expansions(p, std::span<const Cell>(cells), cap);
}

bool subsumes_at(const Pattern& inner, const Pattern& outer, std::size_t pos) {
  if (pos + inner.size() > outer.size()) return false;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    const Cell ic = inner[j];
    if (ic != kWildcard && ic != outer[pos + j]) return false;
  }
  return true;
}

bool is_subsumed(const Pattern& inner, const Pattern& outer) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t pos = 0; pos + inner.size() <= outer.size(); ++pos)
    if (subsumes_at(inner, outer, pos)) return true;
  return false;
}

}  // namespace scs
