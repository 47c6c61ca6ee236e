#include "scs/solvers.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "scs/errors.hpp"
#include "scs/tracker.hpp"

namespace scs {

std::vector<std::size_t> subsumption_survivors(const std::vector<Pattern>& positives) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < positives.size() && !drop; ++j) {
      if (j == i) continue;
      if (!is_subsumed(positives[i], positives[j])) continue;
      if (positives[i] == positives[j]) {
        if (j < i) drop = true;  // duplicate: earliest survives
      } else {
        drop = true;
      }
    }
    if (!drop) out.push_back(i);
  }
  return out;
}

namespace {

bool in_choices(const std::vector<Cell>& choices, Cell c) {
  return std::find(choices.begin(), choices.end(), c) != choices.end();
}

bool negative_certain_at(const Pattern& negative, const Pattern& piece,
                         std::size_t pos) {
  for (std::size_t k = 0; k < negative.size(); ++k) {
    const Cell nc = negative[k];
    if (nc == kWildcard) continue;
    const Cell pc = piece[pos + k];
    if (pc == kWildcard || pc != nc) return false;
  }
  return true;
}

bool rule_certain_at(const NegativeRule& rule, const Pattern& piece,
                     std::size_t pos) {
  const auto& choices = rule.wildcard_choices;
  // The pattern must match under every completion of the piece.
  for (std::size_t k = 0; k < rule.pattern.size(); ++k) {
    const Cell rc = rule.pattern[k];
    const Cell pc = piece[pos + k];
    if (rc == kWildcard) {
      if (choices.empty()) continue;  // full alphabet accepts anything
      if (pc == kWildcard || !in_choices(choices, pc)) return false;
    } else {
      if (pc != rc) return false;  // a piece wildcard may dodge a literal
    }
  }
  // No exception may match under any completion consistent with the above.
  // Wherever the piece still has a wildcard the pattern cell was a
  // full-alphabet wildcard, so that slot is free.
  for (const auto& e : rule.exceptions) {
    bool possible = true;
    for (std::size_t k = 0; k < e.size() && possible; ++k) {
      const Cell ec = e[k];
      const Cell pc = piece[pos + k];
      if (ec == kWildcard) {
        if (choices.empty() || pc == kWildcard) continue;
        if (!in_choices(choices, pc)) possible = false;
      } else {
        if (pc != kWildcard && pc != ec) possible = false;
      }
    }
    if (possible) return false;
  }
  return true;
}

}  // namespace

bool certain_violation(const Pattern& piece, const Instance& instance) {
  for (const auto& n : instance.negatives()) {
    if (n.size() > piece.size()) continue;
    for (std::size_t pos = 0; pos + n.size() <= piece.size(); ++pos)
      if (negative_certain_at(n, piece, pos)) return true;
  }
  for (const auto& r : instance.rules()) {
    if (r.pattern.size() > piece.size()) continue;
    for (std::size_t pos = 0; pos + r.pattern.size() <= piece.size(); ++pos)
      if (rule_certain_at(r, piece, pos)) return true;
  }
  return false;
}

namespace {

// One search node of the arrangement search: which pieces are already
// spelled, which piece is mid-emission (and how far), and the constraint
// tracker. Padding is only allowed at piece boundaries once spelling began.
struct AssembleState {
  std::uint64_t done = 0;
  std::int32_t current = -1;
  std::uint32_t offset = 0;
  TrackerState tracker;
};

struct AssemblePath {
  std::int64_t parent = -1;
  Cell token = kWildcard;
};

}  // namespace

Pattern assemble_pieces(const std::vector<Pattern>& pieces,
                        const Instance& instance, const SearchLimits& limits) {
  if (pieces.size() > 64)
    throw ContractError("arrangement search supports at most 64 pieces");
  const NegativeTracker tracker(instance);
  if (tracker.initially_violated())
    throw HeuristicError("every string is forbidden (empty negative)");
  const std::uint64_t all_done =
      pieces.empty() ? 0 : (pieces.size() == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << pieces.size()) - 1);

  AssembleState start;
  start.tracker = tracker.initial();
  // Empty pieces are spelled by definition.
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].empty()) start.done |= std::uint64_t{1} << i;
  if (start.done == all_done) return Pattern{};

  auto encode = [&](const AssembleState& s) {
    std::string key;
    key.reserve(24 + s.tracker.windows.size() * 16);
    for (int b = 0; b < 8; ++b)
      key.push_back(static_cast<char>((s.done >> (8 * b)) & 0xff));
    for (int b = 0; b < 4; ++b)
      key.push_back(static_cast<char>((static_cast<std::uint32_t>(s.current) >> (8 * b)) & 0xff));
    for (int b = 0; b < 4; ++b)
      key.push_back(static_cast<char>((s.offset >> (8 * b)) & 0xff));
    tracker.append_bytes(s.tracker, key);
    return key;
  };

  const std::size_t sigma = instance.alphabet().size();
  std::unordered_map<std::string, std::int64_t> visited;
  std::vector<AssemblePath> path{AssemblePath{}};
  std::vector<AssembleState> frontier{start};
  std::vector<std::int64_t> frontier_ids{0};
  visited.emplace(encode(start), 0);
  std::uint64_t stored = 1;

  auto reconstruct = [&](std::int64_t id) {
    std::vector<Cell> cells;
    while (id >= 0) {
      if (path[static_cast<std::size_t>(id)].token != kWildcard)
        cells.push_back(path[static_cast<std::size_t>(id)].token);
      id = path[static_cast<std::size_t>(id)].parent;
    }
    std::reverse(cells.begin(), cells.end());
    return Pattern(std::move(cells));
  };

  for (std::size_t layer = 0; layer < limits.max_length; ++layer) {
    std::vector<AssembleState> next_frontier;
    std::vector<std::int64_t> next_ids;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const AssembleState& cur = frontier[f];

      // Candidate moves, each emitting exactly one cell.
      struct Move {
        Cell token;
        std::int32_t piece;   // -1 = padding
        std::uint32_t offset; // offset after the emitted cell
      };
      std::vector<Move> moves;
      const bool at_boundary =
          cur.current < 0 ||
          cur.offset >= pieces[static_cast<std::size_t>(cur.current)].size();
      if (!at_boundary) {
        const Pattern& piece = pieces[static_cast<std::size_t>(cur.current)];
        const Cell pc = piece[cur.offset];
        if (pc == kWildcard) {
          for (std::size_t c = 0; c < sigma; ++c)
            moves.push_back({static_cast<Cell>(c), cur.current, cur.offset + 1});
        } else {
          moves.push_back({pc, cur.current, cur.offset + 1});
        }
      } else {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          if (cur.done & (std::uint64_t{1} << i)) continue;
          const Cell pc = pieces[i][0];
          if (pc == kWildcard) {
            for (std::size_t c = 0; c < sigma; ++c)
              moves.push_back({static_cast<Cell>(c), static_cast<std::int32_t>(i), 1});
          } else {
            moves.push_back({pc, static_cast<std::int32_t>(i), 1});
          }
        }
        // Padding before the first piece is never useful: stripping a pad
        // prefix keeps every piece occurrence and removes no constraint.
        if (layer > 0)
          for (std::size_t c = 0; c < sigma; ++c)
            moves.push_back({static_cast<Cell>(c), -1, 0});
      }

      for (const Move& mv : moves) {
        auto next_tracker = tracker.advance(cur.tracker, mv.token);
        if (!next_tracker) continue;
        AssembleState nxt;
        nxt.tracker = std::move(*next_tracker);
        nxt.done = cur.done;
        if (mv.piece >= 0 &&
            mv.offset >= pieces[static_cast<std::size_t>(mv.piece)].size()) {
          nxt.done |= std::uint64_t{1} << mv.piece;
          nxt.current = -1;
          nxt.offset = 0;
        } else {
          nxt.current = mv.piece;
          nxt.offset = mv.offset;
        }
        std::string key = encode(nxt);
        auto [it, fresh] = visited.emplace(std::move(key), 0);
        if (!fresh) continue;
        const std::int64_t id = static_cast<std::int64_t>(path.size());
        it->second = id;
        path.push_back(AssemblePath{frontier_ids[f], mv.token});
        ++stored;
        if (nxt.done == all_done && nxt.current < 0) return reconstruct(id);
        if (stored > limits.max_states)
          throw HeuristicError("arrangement search exceeded max_states");
        next_frontier.push_back(std::move(nxt));
        next_ids.push_back(id);
      }
    }
    if (next_frontier.empty())
      throw HeuristicError("no feasible arrangement of the pieces exists");
    frontier = std::move(next_frontier);
    frontier_ids = std::move(next_ids);
  }
  throw HeuristicError("arrangement search exceeded max_length");
}

namespace {

SolveOutcome finish_with_assembly(std::vector<Pattern> pieces,
                                  const Instance& instance,
                                  const SearchLimits& limits) {
  const Pattern text = assemble_pieces(pieces, instance, limits);
  const ValidationReport report = validate_superstring(instance, text);
  if (!report.is_valid())
    throw HeuristicError("assembled string failed validation");
  SolveOutcome outcome;
  outcome.kind = SolveOutcome::Kind::Feasible;
  outcome.text = text;
  outcome.length = text.size();
  return outcome;
}

std::vector<Pattern> surviving_pieces(const Instance& instance) {
  std::vector<Pattern> pieces;
  for (std::size_t idx : subsumption_survivors(instance.positives()))
    pieces.push_back(instance.positives()[idx]);
  return pieces;
}

}  // namespace

SolveOutcome solve_exact_dp(const Instance& instance, std::size_t piece_cap) {
  if (instance.variant() != Variant::Scs)
    throw ContractError("the subset DP applies only to unconstrained "
                        "wildcard-free instances");
  std::vector<Pattern> pieces = surviving_pieces(instance);
  SolveOutcome outcome;
  outcome.kind = SolveOutcome::Kind::Optimal;
  if (pieces.empty()) {
    outcome.text = Pattern{};
    outcome.length = 0;
    return outcome;
  }
  if (pieces.size() > piece_cap)
    throw SizeGuardError("piece count exceeds the subset DP cap");

  const std::size_t n = pieces.size();
  std::vector<std::vector<std::size_t>> ov(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) ov[i][j] = best_merge(pieces[i], pieces[j]).overlap;

  const std::size_t full = (std::size_t{1} << n) - 1;
  const std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::vector<std::size_t>> dp(full + 1,
                                           std::vector<std::size_t>(n, kInf));
  std::vector<std::vector<std::int32_t>> prev(
      full + 1, std::vector<std::int32_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    dp[std::size_t{1} << i][i] = pieces[i].size();
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < n; ++last) {
      if (!(mask & (std::size_t{1} << last)) || dp[mask][last] >= kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        const std::size_t nmask = mask | (std::size_t{1} << j);
        const std::size_t cand = dp[mask][last] + pieces[j].size() - ov[last][j];
        if (cand < dp[nmask][j]) {
          dp[nmask][j] = cand;
          prev[nmask][j] = static_cast<std::int32_t>(last);
        }
      }
    }
  }

  std::size_t best_last = 0;
  for (std::size_t last = 1; last < n; ++last)
    if (dp[full][last] < dp[full][best_last]) best_last = last;

  std::vector<std::size_t> order;
  std::size_t mask = full;
  std::int32_t last = static_cast<std::int32_t>(best_last);
  while (last >= 0) {
    order.push_back(static_cast<std::size_t>(last));
    const std::int32_t p = prev[mask][static_cast<std::size_t>(last)];
    mask &= ~(std::size_t{1} << last);
    last = p;
  }
  std::reverse(order.begin(), order.end());

  Pattern text = pieces[order[0]];
  for (std::size_t k = 1; k < order.size(); ++k)
    text = best_merge(text, pieces[order[k]]).merged;
  outcome.text = text;
  outcome.length = text.size();
  return outcome;
}

SolveOutcome solve_greedy(const Instance& instance, const SearchLimits& limits) {
  std::vector<Pattern> pieces = surviving_pieces(instance);
  while (pieces.size() > 1) {
    std::size_t best_overlap = 0;
    std::size_t best_li = 0, best_ri = 0;
    Pattern best_piece;
    bool found = false;
    for (std::size_t li = 0; li < pieces.size(); ++li) {
      for (std::size_t ri = 0; ri < pieces.size(); ++ri) {
        if (li == ri) continue;
        MergeResult mr = best_merge(pieces[li], pieces[ri]);
        if (mr.overlap == 0 || mr.overlap <= best_overlap) continue;
        if (certain_violation(mr.merged, instance)) continue;
        best_overlap = mr.overlap;
        best_li = li;
        best_ri = ri;
        best_piece = std::move(mr.merged);
        found = true;
      }
    }
    if (!found) break;
    pieces[best_li] = std::move(best_piece);
    pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(best_ri));
  }
  return finish_with_assembly(std::move(pieces), instance, limits);
}

SolveOutcome solve_group_merge(const Instance& instance,
                               const SearchLimits& limits) {
  const Variant v = instance.variant();
  if (v != Variant::Scs && v != Variant::Scsn)
    throw ContractError("group merge requires a wildcard-free instance");
  std::vector<Pattern> pieces = surviving_pieces(instance);

  while (pieces.size() > 1) {
    // For each seed, grow the best chain and keep the prefix with the
    // lowest length-per-piece ratio.
    double best_ratio = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_members;
    Pattern best_blob;

    for (std::size_t seed = 0; seed < pieces.size(); ++seed) {
      Pattern blob = pieces[seed];
      std::vector<std::size_t> members{seed};
      std::vector<char> used(pieces.size(), 0);
      used[seed] = 1;

      double seed_best_ratio = static_cast<double>(blob.size());
      std::vector<std::size_t> seed_best_members = members;
      Pattern seed_best_blob = blob;

      while (members.size() < pieces.size()) {
        bool grew = false;
        std::size_t grow_overlap = 0;
        std::size_t grow_q = 0;
        bool grow_right = true;
        Pattern grow_blob;
        for (std::size_t q = 0; q < pieces.size(); ++q) {
          if (used[q]) continue;
          MergeResult right = best_merge(blob, pieces[q]);
          if (!certain_violation(right.merged, instance) &&
              (!grew || right.overlap > grow_overlap)) {
            grew = true;
            grow_overlap = right.overlap;
            grow_q = q;
            grow_right = true;
            grow_blob = std::move(right.merged);
          }
          MergeResult left = best_merge(pieces[q], blob);
          if (!certain_violation(left.merged, instance) &&
              (!grew || left.overlap > grow_overlap)) {
            grew = true;
            grow_overlap = left.overlap;
            grow_q = q;
            grow_right = false;
            grow_blob = std::move(left.merged);
          }
        }
        if (!grew || grow_overlap == 0) break;
        blob = std::move(grow_blob);
        used[grow_q] = 1;
        members.push_back(grow_q);
        (void)grow_right;
        const double ratio =
            static_cast<double>(blob.size()) / static_cast<double>(members.size());
        if (ratio < seed_best_ratio) {
          seed_best_ratio = ratio;
          seed_best_members = members;
          seed_best_blob = blob;
        }
      }

      if (seed_best_ratio < best_ratio) {
        best_ratio = seed_best_ratio;
        best_members = seed_best_members;
        best_blob = seed_best_blob;
      }
    }

    if (best_members.size() <= 1) break;
    std::vector<Pattern> next;
    std::vector<char> absorbed(pieces.size(), 0);
    for (std::size_t m : best_members) absorbed[m] = 1;
    next.push_back(best_blob);
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (!absorbed[i]) next.push_back(pieces[i]);
    pieces = std::move(next);
  }
  return finish_with_assembly(std::move(pieces), instance, limits);
}

}  // namespace scs
