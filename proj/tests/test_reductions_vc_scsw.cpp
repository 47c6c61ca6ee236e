#include <string>
#include <vector>

#include "doctest.h"
#include "scs/engine.hpp"
#include "scs/errors.hpp"
#include "scs/reductions.hpp"
#include "scs/solvers.hpp"
#include "test_util.hpp"

using namespace scs;
using test::chars_alphabet;
using test::fig_graph;
using test::text_of;

TEST_CASE("affix compiler emits context rules with boundary variants") {
  const Alphabet sigma = chars_alphabet("xyBE");
  const Cell B = *sigma.find("B");
  const Cell E = *sigma.find("E");
  const AffixOptions plain{{}, {}, {}};

  SUBCASE("pure position constraints") {
    // B may never have a predecessor, E never a successor.
    auto rules = affix_rules(Pattern({B}), 1, 0, {}, sigma, plain);
    REQUIRE(rules.size() == 1);
    CHECK(rules[0].pattern == Pattern({kWildcard, B}));
    CHECK(rules[0].exceptions.empty());
    CHECK(rules[0].wildcard_choices.empty());

    rules = affix_rules(Pattern({E}), 0, 1, {}, sigma, plain);
    REQUIRE(rules.size() == 1);
    CHECK(rules[0].pattern == Pattern({E, kWildcard}));
  }

  SUBCASE("a rule covered by its exceptions vanishes") {
    const Pattern x = text_of("x", sigma);
    CHECK(affix_rules(x, 0, 0, {x}, sigma, plain).empty());
    // Allowing every one-cell prefix is the same as allowing anything.
    CHECK(affix_rules(x, 1, 0, {text_of("?x", sigma)}, sigma, plain).empty());
  }

  SUBCASE("anchored variants keep only members that fit the boundary") {
    AffixOptions anchored{{}, B, {}};
    const auto rules =
        affix_rules(text_of("x", sigma), 1, 0, {text_of("yx", sigma)}, sigma,
                    anchored);
    REQUIRE(rules.size() == 2);
    CHECK(rules[0].pattern == text_of("?x", sigma));
    REQUIRE(rules[0].exceptions.size() == 1);
    CHECK(rules[0].exceptions[0] == text_of("yx", sigma));
    // y overhangs nothing but meets the anchor with a non-anchor literal,
    // so the start-of-text variant forbids x there outright.
    CHECK(rules[1].pattern == Pattern({B, *sigma.find("x")}));
    CHECK(rules[1].exceptions.empty());
  }

  SUBCASE("wildcard member cells accept the anchor") {
    AffixOptions anchored{{}, B, {}};
    // The member's prefix cell is a wildcard: it survives to the anchored
    // variant and makes it vacuous, so only nothing remains.
    const auto rules =
        affix_rules(text_of("x", sigma), 1, 0, {text_of("?x", sigma)}, sigma,
                    anchored);
    CHECK(rules.empty());
  }

  SUBCASE("two-sided anchors") {
    AffixOptions both{{}, B, E};
    const auto rules = affix_rules(text_of("x", sigma), 1, 1,
                                   {text_of("yxy", sigma)}, sigma, both);
    // interior, left-anchored, right-anchored, and both-anchored variants
    REQUIRE(rules.size() == 4);
    CHECK(rules[0].pattern == text_of("?x?", sigma));
    CHECK(rules[1].pattern == Pattern({B, *sigma.find("x"), kWildcard}));
    CHECK(rules[2].pattern == Pattern({kWildcard, *sigma.find("x"), E}));
    CHECK(rules[3].pattern == Pattern({B, *sigma.find("x"), E}));
    for (std::size_t i = 1; i < 4; ++i) CHECK(rules[i].exceptions.empty());
  }

  SUBCASE("contract violations") {
    CHECK_THROWS_AS(affix_rules(Pattern{}, 1, 0, {}, sigma, plain),
                    ContractError);
    CHECK_THROWS_AS(
        affix_rules(text_of("x", sigma), 1, 0, {text_of("x", sigma)}, sigma, plain),
        ContractError);  // wrong member width
    CHECK_THROWS_AS(
        affix_rules(text_of("x", sigma), 1, 0, {text_of("yy", sigma)}, sigma, plain),
        ContractError);  // member disagrees with the center
  }
}

TEST_CASE("certificate closed forms invert exactly") {
  Certificate cert;
  cert.reduction = "vc-scs";
  cert.params = {{"vertices", 4}, {"edges", 5}};
  cert.predicted_formula = "4*m + k";
  CHECK(cert.predicted_length(2) == 22);
  CHECK(cert.cost_from_length(22) == 2);
  CHECK(cert.cost_from_length(20) == 0);
  CHECK_THROWS_AS(cert.cost_from_length(19), ExtractionError);

  cert.reduction = "coloring-scsw";
  CHECK(cert.predicted_length(3) == 175);
  CHECK(cert.cost_from_length(175) == 3);
  CHECK_THROWS_AS(cert.cost_from_length(176), ExtractionError);

  cert.reduction = "nonsense";
  CHECK_THROWS_AS(cert.predicted_length(1), ContractError);

  Certificate missing;
  missing.reduction = "vc-scs";
  CHECK_THROWS_AS(missing.predicted_length(1), ContractError);
}

TEST_CASE("certificate JSON roundtrip keeps fields and order") {
  const ReductionArtifact artifact = vc_to_scs(fig_graph());
  const std::string text = write_certificate(artifact.certificate);
  const Certificate back = read_certificate(text);
  CHECK(back.reduction == artifact.certificate.reduction);
  CHECK(back.params == artifact.certificate.params);
  CHECK(back.predicted_formula == artifact.certificate.predicted_formula);
  CHECK(back.normalization == artifact.certificate.normalization);
  CHECK(back.token_map == artifact.certificate.token_map);
  CHECK(back.deviations == artifact.certificate.deviations);

  CHECK(text.find("\"reduction\"") < text.find("\"params\""));
  CHECK(text.find("\"params\"") < text.find("\"predicted_length\""));
  CHECK(text.find("\"predicted_length\"") < text.find("\"normalization\""));
  CHECK(text.find("\"normalization\"") < text.find("\"token_map\""));
  CHECK(text.find("\"token_map\"") < text.find("\"deviations\""));

  CHECK_THROWS_AS(read_certificate("{}"), ParseError);
  CHECK_THROWS_AS(read_certificate("no json"), ParseError);
}

TEST_CASE("vertex cover reduction") {
  const Graph g = fig_graph();
  const ReductionArtifact artifact = vc_to_scs(g);
  const Instance& instance = artifact.instance;

  CHECK(instance.variant() == Variant::Scs);
  REQUIRE(instance.positives().size() == 10);
  CHECK(instance.alphabet().tokens() ==
        std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(instance.positives()[0] == Pattern({0, 1, 0, 1}));
  CHECK(instance.positives()[1] == Pattern({1, 0, 1, 0}));
  CHECK(instance.positives()[8] == Pattern({2, 3, 2, 3}));

  CHECK(artifact.certificate.reduction == "vc-scs");
  CHECK(artifact.certificate.params.at("edges") == 5);
  CHECK(artifact.certificate.normalization == 1);
  CHECK(artifact.certificate.predicted_length(2) == 22);
  CHECK(artifact.certificate.deviations.empty());

  CHECK_THROWS_AS(vc_to_scs(Graph{0, {}}), ContractError);
  CHECK_THROWS_AS(vc_to_scs(Graph{2, {{0, 0}}}), ContractError);
  CHECK_THROWS_AS(vc_to_scs(Graph{2, {{1, 0}}}), ContractError);
  CHECK_THROWS_AS(vc_to_scs(Graph{2, {{0, 1}, {0, 1}}}), ContractError);
  CHECK_THROWS_AS(vc_to_scs(Graph{2, {{0, 5}}}), ContractError);
}

TEST_CASE("vertex cover witness and extraction") {
  const Graph g = fig_graph();
  const Pattern witness = vc_witness(g, {1, 3});
  CHECK(witness.size() == 22);
  CHECK(witness.render(vc_to_scs(g).instance.alphabet()) ==
        "2121232324242414143434");

  CHECK(scs_to_vc(g, witness) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(scs_to_vc(g, Pattern({0, 1, 0})), ExtractionError);

  CHECK_THROWS_AS(vc_witness(g, {0}), ContractError);  // not a cover
  CHECK_THROWS_AS(vc_witness(g, {9}), ContractError);  // out of range
  // Full cover: every edge charges its smaller endpoint, vertex 3 is never
  // a hub, so only three hub cells are spent.
  CHECK(vc_witness(g, {0, 1, 2, 3}).size() == 4 * 5 + 3);

  // The subset dynamic program reproduces the predicted optimum and the
  // extraction recovers the unique minimum cover.
  const ReductionArtifact artifact = vc_to_scs(g);
  const SolveOutcome dp = solve_exact_dp(artifact.instance);
  CHECK(dp.length == 22);
  const std::vector<int> cover = scs_to_vc(g, dp.text);
  CHECK(is_vertex_cover(g, cover));
  CHECK(cover.size() == 2);
  CHECK(artifact.certificate.cost_from_length(dp.length) == 2);
}

TEST_CASE("coloring reduction") {
  const Graph g = fig_graph();
  const ReductionArtifact artifact = coloring_to_scsw(g);
  const Instance& instance = artifact.instance;
  const Alphabet& dna = instance.alphabet();

  CHECK(instance.variant() == Variant::Scsw);
  REQUIRE(instance.positives().size() == 4);
  for (const Pattern& p : instance.positives()) CHECK(p.size() == 85);

  // Middle five cells are the per-vertex edge profile.
  auto profile_of = [&](int vertex) {
    std::string s;
    for (std::size_t k = 40; k < 45; ++k) {
      const Cell c = instance.positives()[static_cast<std::size_t>(vertex)][k];
      s += c == kWildcard ? '?' : dna.token(c)[0];
    }
    return s;
  };
  CHECK(profile_of(0) == "AA???");
  CHECK(profile_of(1) == "T?AA?");
  CHECK(profile_of(2) == "??T?A");
  CHECK(profile_of(3) == "?T?TT");

  CHECK(artifact.certificate.normalization == 45);
  CHECK(artifact.certificate.predicted_length(3) == 175);
}

TEST_CASE("coloring witness and extraction") {
  const Graph g = fig_graph();
  const Alphabet dna = coloring_to_scsw(g).instance.alphabet();
  const Pattern witness = coloring_witness(g, {0, 1, 0, 2});
  REQUIRE(witness.size() == 175);

  // First block merges the class {vertex 1, vertex 3} profiles.
  std::string first_block;
  for (std::size_t k = 40; k < 45; ++k) first_block += dna.token(witness[k])[0];
  CHECK(first_block == "AATAA");

  CHECK_THROWS_AS(coloring_witness(g, {0, 0, 1, 2}), ContractError);
  CHECK_THROWS_AS(coloring_witness(g, {0, 1}), ContractError);
  // Color labels may be arbitrary integers.
  CHECK(coloring_witness(g, {7, -2, 7, 40}).size() == 175);

  const std::vector<int> colors = scsw_to_coloring(g, witness);
  CHECK(colors == std::vector<int>{0, 1, 0, 2});
  CHECK_THROWS_AS(scsw_to_coloring(g, Pattern({0, 1})), ExtractionError);

  // A two-class witness of a bipartite graph stays within two blocks.
  const Graph path{3, {{0, 1}, {1, 2}}};
  const Pattern two = coloring_witness(path, {0, 1, 0});
  CHECK(two.size() == coloring_to_scsw(path).certificate.predicted_length(2));
  const std::vector<int> path_colors = scsw_to_coloring(path, two);
  CHECK(is_proper_coloring(path, path_colors));

  // Greedy merging achieves the predicted three-class length on the
  // fixture: same-class strings unify, the rest chain through separators.
  const SolveOutcome greedy = solve_greedy(coloring_to_scsw(g).instance);
  CHECK(greedy.length == 175);
}
