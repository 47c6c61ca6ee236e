#include "scs/tracker.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "scs/errors.hpp"

namespace scs {

NegativeTracker::NegativeTracker(const Instance& instance) {
  sigma_ = instance.alphabet().size();

  // Trie over the wildcard-free negatives.
  std::vector<std::vector<std::int32_t>> child;
  auto add_node = [&] {
    child.emplace_back(sigma_, -1);
    terminal_.push_back(0);
    return static_cast<std::int32_t>(child.size() - 1);
  };
  add_node();  // root
  for (const auto& neg : instance.negatives()) {
    if (!neg.is_text()) continue;
    std::int32_t node = 0;
    for (std::size_t i = 0; i < neg.size(); ++i) {
      const Cell c = neg[i];
      if (child[node][c] < 0) child[node][c] = add_node();
      node = child[node][c];
    }
    terminal_[node] = 1;
  }

  // Breadth-first failure links; terminal flags propagate along them so a
  // node is terminal iff some negative ends anywhere on its suffix chain.
  std::vector<std::int32_t> fail(child.size(), 0);
  next_.assign(child.size() * std::max<std::size_t>(sigma_, 1), 0);
  std::queue<std::int32_t> bfs;
  for (std::size_t c = 0; c < sigma_; ++c) {
    const std::int32_t v = child[0][c];
    if (v >= 0) {
      fail[v] = 0;
      next_[c] = v;
      bfs.push(v);
    } else {
      next_[c] = 0;
    }
  }
  while (!bfs.empty()) {
    const std::int32_t u = bfs.front();
    bfs.pop();
    terminal_[u] = terminal_[u] | terminal_[fail[u]];
    for (std::size_t c = 0; c < sigma_; ++c) {
      const std::int32_t v = child[u][c];
      if (v >= 0) {
        fail[v] = next_[fail[u] * sigma_ + c];
        next_[u * sigma_ + c] = v;
        bfs.push(v);
      } else {
        next_[u * sigma_ + c] = next_[fail[u] * sigma_ + c];
      }
    }
  }

  // Wildcarded negatives become exception-free rules; real rules follow.
  for (const auto& neg : instance.negatives()) {
    if (neg.is_text()) continue;
    tracked_.push_back(TrackedRule{neg, {}, {}});
  }
  for (const auto& rule : instance.rules())
    tracked_.push_back(TrackedRule{rule.pattern, rule.exceptions, rule.wildcard_choices});
  for (const auto& r : tracked_) {
    if (r.exceptions.size() > 64)
      throw ContractError("a rule may carry at most 64 exceptions");
    if (r.pattern.empty()) throw ContractError("tracked pattern must be non-empty");
  }
}

std::optional<TrackerState> NegativeTracker::advance(const TrackerState& state,
                                                     Cell token) const {
  if (token < 0 || static_cast<std::size_t>(token) >= sigma_)
    throw ContractError("tracker fed a cell outside the alphabet");

  TrackerState out;
  out.node = next_[static_cast<std::size_t>(state.node) * sigma_ +
                   static_cast<std::size_t>(token)];
  if (terminal_[out.node]) return std::nullopt;

  auto step_window = [&](std::uint32_t rule_id, std::uint32_t age,
                         std::uint64_t alive) -> bool {
    // Returns false when a violation completes.
    const TrackedRule& r = tracked_[rule_id];
    if (!rule_cell_matches(r.pattern[age], r.choices, token)) return true;
    std::uint64_t next_alive = 0;
    for (std::uint64_t rest = alive; rest;) {
      const int k = std::countr_zero(rest);
      rest &= rest - 1;
      if (rule_cell_matches(r.exceptions[static_cast<std::size_t>(k)][age],
                            r.choices, token))
        next_alive |= std::uint64_t{1} << k;
    }
    if (age + 1 == r.pattern.size()) {
      if (next_alive == 0) return false;
      return true;  // an exception absorbs the completed window
    }
    out.windows.push_back(TrackerWindow{rule_id, age + 1, next_alive});
    return true;
  };

  for (const TrackerWindow& w : state.windows)
    if (!step_window(w.rule_id, w.age, w.exceptions_alive)) return std::nullopt;

  for (std::uint32_t rid = 0; rid < tracked_.size(); ++rid) {
    const std::uint64_t all =
        tracked_[rid].exceptions.empty()
            ? 0
            : (tracked_[rid].exceptions.size() == 64
                   ? ~std::uint64_t{0}
                   : (std::uint64_t{1} << tracked_[rid].exceptions.size()) - 1);
    if (!step_window(rid, 0, all)) return std::nullopt;
  }

  std::sort(out.windows.begin(), out.windows.end());
  out.windows.erase(std::unique(out.windows.begin(), out.windows.end()),
                    out.windows.end());
  return out;
}

std::uint64_t NegativeTracker::state_bound() const {
  const std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t bound = terminal_.size();
  for (const auto& r : tracked_) {
    std::uint64_t per_slot = 1;  // 1 + 2^|exceptions|
    if (r.exceptions.size() >= 63) {
      per_slot = kMax;
    } else {
      per_slot = 1 + (std::uint64_t{1} << r.exceptions.size());
    }
    for (std::size_t age = 1; age < r.pattern.size(); ++age) {
      if (per_slot != 0 && bound > kMax / per_slot) return kMax;
      bound *= per_slot;
    }
  }
  return bound;
}

void NegativeTracker::append_bytes(const TrackerState& state,
                                   std::string& out) const {
  auto push32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  auto push64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  push32(static_cast<std::uint32_t>(state.node));
  push32(static_cast<std::uint32_t>(state.windows.size()));
  for (const auto& w : state.windows) {
    push32(w.rule_id);
    push32(w.age);
    push64(w.exceptions_alive);
  }
}

}  // namespace scs
