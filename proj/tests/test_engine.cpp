#include <string>
#include <vector>

#include "doctest.h"
#include "scs/engine.hpp"
#include "scs/errors.hpp"
#include "scs/instance.hpp"
#include "scs/solvers.hpp"
#include "scs/source_problems.hpp"
#include "test_util.hpp"

using namespace scs;
using test::brute_optimum;
using test::chars_alphabet;
using test::text_of;

TEST_CASE("layered search returns the first text in length-then-lex order") {
  const Alphabet ab = chars_alphabet("ab");

  SUBCASE("forbidden substrings force a detour") {
    const Instance instance(ab, {text_of("ab", ab), text_of("ba", ab)},
                            {text_of("aba", ab), text_of("bab", ab)});
    const SolveOutcome out = shortest_superstring(instance);
    REQUIRE(out.kind == SolveOutcome::Kind::Optimal);
    CHECK(out.length == 4);
    CHECK(out.text == text_of("abba", ab));
    CHECK(out.stats.layers == 4);
    CHECK(out.stats.states_stored >= 4);
  }

  SUBCASE("wildcard positive picks the cheapest filling") {
    const Alphabet atgc = chars_alphabet("ATGC");
    const Instance instance(atgc, {text_of("A?A", atgc)},
                            {text_of("AAA", atgc)});
    const SolveOutcome out = shortest_superstring(instance);
    REQUIRE(out.kind == SolveOutcome::Kind::Optimal);
    CHECK(out.length == 3);
    CHECK(out.text == text_of("ATA", atgc));
  }

  SUBCASE("trivial inputs") {
    const Instance empty(ab, {});
    SolveOutcome out = shortest_superstring(empty);
    CHECK(out.kind == SolveOutcome::Kind::Optimal);
    CHECK(out.length == 0);
    CHECK(out.text.empty());

    const Instance empty_positive(ab, {Pattern{}});
    out = shortest_superstring(empty_positive);
    CHECK(out.kind == SolveOutcome::Kind::Optimal);
    CHECK(out.length == 0);
  }
}

TEST_CASE("infeasible instances exhaust the frontier") {
  const Alphabet ab = chars_alphabet("ab");
  const Instance instance(ab, {text_of("aa", ab)}, {text_of("aa", ab)});
  const SolveOutcome out = shortest_superstring(instance);
  CHECK(out.kind == SolveOutcome::Kind::Infeasible);

  const Instance doomed(ab, {text_of("a", ab)}, {Pattern{}});
  CHECK(shortest_superstring(doomed).kind == SolveOutcome::Kind::Infeasible);
}

TEST_CASE("limits are reported by name") {
  const Alphabet ab = chars_alphabet("ab");
  const Instance instance(ab, {text_of("abab", ab)});

  SearchLimits tight;
  tight.max_states = 2;
  SolveOutcome out = shortest_superstring(instance, tight);
  CHECK(out.kind == SolveOutcome::Kind::LimitExceeded);
  CHECK(out.limit_name == "max_states");

  SearchLimits shallow;
  shallow.max_length = 2;
  out = shortest_superstring(instance, shallow);
  CHECK(out.kind == SolveOutcome::Kind::LimitExceeded);
  CHECK(out.limit_name == "max_length");

  SearchLimits slim;
  slim.max_memory_bytes = 64;
  out = shortest_superstring(instance, slim);
  CHECK(out.kind == SolveOutcome::Kind::LimitExceeded);
  CHECK(out.limit_name == "max_memory");
}

TEST_CASE("engine enforces its size contract") {
  std::vector<std::string> tokens;
  for (int i = 0; i < 65; ++i) tokens.push_back("t" + std::to_string(i));
  const Alphabet wide(tokens);
  CHECK_THROWS_AS(shortest_superstring(Instance(wide, {})), ContractError);

  const Alphabet ab = chars_alphabet("ab");
  const Pattern long_positive(std::vector<Cell>(64, 0));
  CHECK_THROWS_AS(shortest_superstring(Instance(ab, {long_positive})),
                  ContractError);
}

TEST_CASE("engine matches the subset DP on plain instances") {
  RandomSource rng(41);
  for (int round = 0; round < 100; ++round) {
    const std::size_t sigma = 2 + rng.below(2);
    const Alphabet alphabet = chars_alphabet(sigma == 2 ? "ab" : "abc");
    std::vector<Pattern> positives;
    const std::size_t count = 1 + rng.below(5);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Cell> cells(1 + rng.below(4));
      for (auto& c : cells) c = static_cast<Cell>(rng.below(sigma));
      positives.emplace_back(std::move(cells));
    }
    const Instance instance(alphabet, positives);
    const SolveOutcome bfs = shortest_superstring(instance);
    const SolveOutcome dp = solve_exact_dp(instance);
    REQUIRE(bfs.kind == SolveOutcome::Kind::Optimal);
    REQUIRE(dp.kind == SolveOutcome::Kind::Optimal);
    CAPTURE(round);
    CHECK(bfs.length == dp.length);
    CHECK(validate_superstring(instance, bfs.text).is_valid());
    CHECK(validate_superstring(instance, dp.text).is_valid());
  }
}

TEST_CASE("engine matches exhaustive enumeration on constrained instances") {
  RandomSource rng(4242);
  const Alphabet ab = chars_alphabet("ab");
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (int round = 0; round < 30; ++round) {
    std::vector<Pattern> positives;
    const std::size_t pos_count = 1 + rng.below(3);
    for (std::size_t i = 0; i < pos_count; ++i) {
      std::vector<Cell> cells(1 + rng.below(3));
      for (auto& c : cells)
        c = rng.below(5) == 0 ? kWildcard : static_cast<Cell>(rng.below(2));
      positives.emplace_back(std::move(cells));
    }
    std::vector<Pattern> negatives;
    const std::size_t neg_count = rng.below(3);
    for (std::size_t i = 0; i < neg_count; ++i) {
      std::vector<Cell> cells(1 + rng.below(3));
      for (auto& c : cells)
        c = rng.below(6) == 0 ? kWildcard : static_cast<Cell>(rng.below(2));
      negatives.emplace_back(std::move(cells));
    }
    const Instance instance(ab, positives, negatives);

    SearchLimits limits;
    limits.max_length = 9;
    const SolveOutcome out = shortest_superstring(instance, limits);
    const auto reference = brute_optimum(instance, 9);
    CAPTURE(round);
    if (reference) {
      ++feasible_seen;
      REQUIRE(out.kind == SolveOutcome::Kind::Optimal);
      CHECK(out.length == reference->size());
      CHECK(out.text == *reference);
    } else {
      ++infeasible_seen;
      CHECK((out.kind == SolveOutcome::Kind::Infeasible ||
             out.kind == SolveOutcome::Kind::LimitExceeded));
    }
  }
  CHECK(feasible_seen > 0);  // the sample exercises the interesting branch
}

TEST_CASE("feasibility bound multiplies the component state counts") {
  const Alphabet ab = chars_alphabet("ab");
  const Instance instance(ab, {text_of("ab", ab), text_of("ba", ab)},
                          {text_of("aaa", ab), text_of("bbb", ab)});
  CHECK(feasibility_bound(instance) == 112);  // 7 automaton nodes * 2 * 2 * 4
}
