#include "scs/engine.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "scs/errors.hpp"
#include "scs/tracker.hpp"

namespace scs {

namespace {

struct SearchState {
  TrackerState tracker;
  std::vector<std::uint64_t> prefix_masks;  // shift-and mask per positive
  std::uint64_t completed = 0;
};

struct PathEntry {
  std::int64_t parent = -1;
  Cell token = kWildcard;
};

Pattern reconstruct(const std::vector<PathEntry>& path, std::int64_t id) {
  std::vector<Cell> cells;
  while (id >= 0) {
    const PathEntry& e = path[static_cast<std::size_t>(id)];
    if (e.token != kWildcard) cells.push_back(e.token);
    id = e.parent;
  }
  std::reverse(cells.begin(), cells.end());
  return Pattern(std::move(cells));
}

}  // namespace

SolveOutcome shortest_superstring(const Instance& instance,
                                  const SearchLimits& limits) {
  const Alphabet& alphabet = instance.alphabet();
  const auto& positives = instance.positives();
  if (alphabet.size() > 64)
    throw ContractError("search engine supports at most 64 alphabet tokens");
  if (positives.size() > 64)
    throw ContractError("search engine supports at most 64 positives");
  for (const auto& p : positives)
    if (p.size() >= 64)
      throw ContractError("search engine supports positives shorter than 64 cells");

  const NegativeTracker tracker(instance);
  SolveOutcome outcome;
  if (tracker.initially_violated()) {
    outcome.kind = SolveOutcome::Kind::Infeasible;
    return outcome;
  }

  // match_masks[c] bit j set when positive's cell j accepts token c.
  const std::size_t sigma = alphabet.size();
  std::vector<std::vector<std::uint64_t>> match_masks(positives.size());
  std::uint64_t all_done = 0;
  SearchState start;
  start.tracker = tracker.initial();
  start.prefix_masks.assign(positives.size(), 0);
  for (std::size_t i = 0; i < positives.size(); ++i) {
    all_done |= std::uint64_t{1} << i;
    match_masks[i].assign(sigma, 0);
    for (std::size_t j = 0; j < positives[i].size(); ++j) {
      const Cell pc = positives[i][j];
      for (std::size_t c = 0; c < sigma; ++c)
        if (pc == kWildcard || pc == static_cast<Cell>(c))
          match_masks[i][c] |= std::uint64_t{1} << j;
    }
    if (positives[i].empty()) start.completed |= std::uint64_t{1} << i;
  }

  if (start.completed == all_done) {
    outcome.kind = SolveOutcome::Kind::Optimal;
    outcome.text = Pattern{};
    outcome.length = 0;
    outcome.stats.states_stored = 1;
    return outcome;
  }

  auto encode = [&](const SearchState& s) {
    std::string key;
    tracker.append_bytes(s.tracker, key);
    for (std::uint64_t m : s.prefix_masks)
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
    for (int b = 0; b < 8; ++b)
      key.push_back(static_cast<char>((s.completed >> (8 * b)) & 0xff));
    return key;
  };

  std::unordered_map<std::string, std::int64_t> visited;
  std::vector<PathEntry> path;
  std::vector<SearchState> frontier{start};
  std::vector<std::int64_t> frontier_ids{0};
  path.push_back(PathEntry{});
  visited.emplace(encode(start), 0);

  FrontierStats& stats = outcome.stats;
  stats.states_stored = 1;
  stats.max_frontier = 1;
  std::uint64_t approx_bytes = 0;

  for (std::size_t layer = 0; layer < limits.max_length; ++layer) {
    std::vector<SearchState> next_frontier;
    std::vector<std::int64_t> next_ids;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const SearchState& cur = frontier[f];
      ++stats.states_expanded;
      for (std::size_t c = 0; c < sigma; ++c) {
        auto next_tracker = tracker.advance(cur.tracker, static_cast<Cell>(c));
        if (!next_tracker) continue;
        SearchState nxt;
        nxt.tracker = std::move(*next_tracker);
        nxt.prefix_masks.resize(positives.size());
        nxt.completed = cur.completed;
        for (std::size_t i = 0; i < positives.size(); ++i) {
          if (nxt.completed & (std::uint64_t{1} << i)) {
            nxt.prefix_masks[i] = 0;  // canonical: finished positives idle
            continue;
          }
          const std::uint64_t d =
              ((cur.prefix_masks[i] << 1) | 1) & match_masks[i][c];
          if (d & (std::uint64_t{1} << (positives[i].size() - 1))) {
            nxt.completed |= std::uint64_t{1} << i;
            nxt.prefix_masks[i] = 0;
          } else {
            nxt.prefix_masks[i] = d;
          }
        }
        std::string key = encode(nxt);
        auto [it, fresh] = visited.emplace(std::move(key), 0);
        if (!fresh) continue;
        const std::int64_t id = static_cast<std::int64_t>(path.size());
        it->second = id;
        path.push_back(PathEntry{frontier_ids[f], static_cast<Cell>(c)});
        ++stats.states_stored;
        approx_bytes += it->first.size() + sizeof(PathEntry) +
                        nxt.prefix_masks.size() * 8 +
                        nxt.tracker.windows.size() * sizeof(TrackerWindow) + 64;

        if (nxt.completed == all_done) {
          outcome.kind = SolveOutcome::Kind::Optimal;
          outcome.text = reconstruct(path, id);
          outcome.length = layer + 1;
          stats.layers = layer + 1;
          return outcome;
        }
        next_frontier.push_back(std::move(nxt));
        next_ids.push_back(id);

        if (stats.states_stored > limits.max_states) {
          outcome.kind = SolveOutcome::Kind::LimitExceeded;
          outcome.limit_name = "max_states";
          stats.layers = layer;
          return outcome;
        }
        if (limits.max_memory_bytes != 0 && approx_bytes > limits.max_memory_bytes) {
          outcome.kind = SolveOutcome::Kind::LimitExceeded;
          outcome.limit_name = "max_memory";
          stats.layers = layer;
          return outcome;
        }
      }
    }
    stats.layers = layer + 1;
    if (next_frontier.empty()) {
      outcome.kind = SolveOutcome::Kind::Infeasible;
      return outcome;
    }
    stats.max_frontier = std::max<std::uint64_t>(stats.max_frontier,
                                                 next_frontier.size());
    frontier = std::move(next_frontier);
    frontier_ids = std::move(next_ids);
  }

  outcome.kind = SolveOutcome::Kind::LimitExceeded;
  outcome.limit_name = "max_length";
  return outcome;
}

std::uint64_t feasibility_bound(const Instance& instance) {
  const std::uint64_t kMax = ~std::uint64_t{0};
  const NegativeTracker tracker(instance);
  std::uint64_t bound = tracker.state_bound();
  auto mul = [&](std::uint64_t factor) {
    if (factor == 0) factor = 1;
    if (bound > kMax / factor) bound = kMax;
    else bound *= factor;
  };
  for (const auto& p : instance.positives()) {
    const std::size_t len = std::max<std::size_t>(p.size(), 1);
    if (len - 1 >= 64) mul(kMax);
    else mul(std::uint64_t{1} << (len - 1));
  }
  if (instance.positives().size() >= 64) mul(kMax);
  else mul(std::uint64_t{1} << instance.positives().size());
  return bound;
}

}  // namespace scs
