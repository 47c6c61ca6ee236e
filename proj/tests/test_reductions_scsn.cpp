#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "scs/errors.hpp"
#include "scs/reductions.hpp"
#include "test_util.hpp"

using namespace scs;
using test::sc_one;
using test::sc_two;

namespace {

Pattern tokens_of(const std::vector<std::string>& tokens, const Alphabet& a) {
  return Pattern::from_tokens(tokens, a);
}

}  // namespace

TEST_CASE("set cover reduction layout") {
  const ReductionArtifact artifact = setcover_to_scsn(sc_two());
  const Instance& instance = artifact.instance;

  CHECK(instance.variant() == Variant::Scsn);
  CHECK(instance.alphabet().tokens() ==
        std::vector<std::string>{"1", "2", "c1", "c2", "l0", "l", "b", "e"});
  REQUIRE(instance.positives().size() == 4);  // one per item, then b, then e
  CHECK(instance.positives()[0] == tokens_of({"1"}, instance.alphabet()));
  CHECK(instance.positives()[2] == tokens_of({"b"}, instance.alphabet()));
  CHECK(instance.positives()[3] == tokens_of({"e"}, instance.alphabet()));

  // One concrete over-long run per item and rotation.
  REQUIRE(instance.negatives().size() == 4);
  for (const Pattern& p : instance.negatives()) CHECK(p.size() == 12);
  CHECK(!instance.rules().empty());

  CHECK(artifact.certificate.reduction == "setcover-scsn");
  CHECK(artifact.certificate.params.at("items") == 2);
  CHECK(artifact.certificate.params.at("sets") == 2);
  CHECK(artifact.certificate.normalization == 2 + 2 * (3 * 2 + 2));
  CHECK(artifact.certificate.deviations.size() == 3);
  CHECK(artifact.certificate.token_map.at("l0") == "spacer head");

  CHECK_THROWS_AS(setcover_to_scsn(SetCover{0, {}}), ContractError);
  CHECK_THROWS_AS(setcover_to_scsn(SetCover{1, {}}), ContractError);
  CHECK_THROWS_AS(setcover_to_scsn(SetCover{2, {{0}}}), ContractError);  // 2 uncovered
  CHECK_THROWS_AS(setcover_to_scsn(SetCover{1, {{0, 0}}}), ContractError);
  CHECK_THROWS_AS(setcover_to_scsn(SetCover{1, {{3}}}), ContractError);
}

TEST_CASE("single-set witness spells the two chained gadgets") {
  const SetCover sc = sc_one();
  const ReductionArtifact artifact = setcover_to_scsn(sc);
  const Alphabet& a = artifact.instance.alphabet();

  // One two-item set: the two gadgets share a boundary set cell.
  REQUIRE(artifact.instance.negatives().size() == 2);
  // 2 frame + 8 item-seed + 32 run-continuation + 2 gadget-follow + 10 spacer.
  CHECK(artifact.instance.rules().size() == 54);

  const Pattern witness = setcover_witness(sc, {0});
  CHECK(witness.size() == 13);
  CHECK(witness == tokens_of({"b", "c1", "1", "c1", "c1", "1", "c1", "2", "c1",
                              "c1", "2", "c1", "e"},
                             a));
  CHECK(artifact.certificate.predicted_length(1) == 13);
  CHECK(artifact.certificate.predicted_length(2) == 25);
  CHECK(artifact.certificate.cost_from_length(13) == 1);
  CHECK_THROWS_AS(artifact.certificate.cost_from_length(12), ExtractionError);

  CHECK(scsn_to_setcover(sc, witness) == std::vector<int>{0});
  CHECK_THROWS_AS(scsn_to_setcover(sc, Pattern({0})), ExtractionError);

  // A one-item universe collapses to a single gadget between the markers.
  CHECK(setcover_witness(SetCover{1, {{0}}}, {0}).size() == 8);
}

TEST_CASE("shorter cheats are rejected by the context rules") {
  const SetCover sc = sc_one();
  const Instance instance = setcover_to_scsn(sc).instance;
  const Alphabet& a = instance.alphabet();

  // Contains every positive but compresses the gadgets illegally: only a
  // rule violation can reject it.
  const ValidationReport shared =
      validate_superstring(instance, tokens_of({"b", "c1", "1", "c1", "2",
                                                "c1", "e"},
                                               a));
  CHECK(shared.missing_positives.empty());
  CHECK(!shared.violations.empty());

  for (const std::vector<std::string>& cheat :
       std::vector<std::vector<std::string>>{
           {"b", "c1", "1", "c1", "e"},           // truncated gadget
           {"b", "1", "c1", "1", "e"},            // item outside any triple
           {"b", "l", "c1", "1", "c1", "l", "e"}  // gadget hugging bare spacer cells
       }) {
    const ValidationReport report =
        validate_superstring(instance, tokens_of(cheat, a));
    CHECK(!report.is_valid());
    CHECK(!report.violations.empty());
  }
}

TEST_CASE("two-set witness crosses a spacer") {
  const SetCover sc = sc_two();
  const ReductionArtifact artifact = setcover_to_scsn(sc);
  const Pattern witness = setcover_witness(sc, {0, 1});
  CHECK(witness.size() == 37);  // b + gadget chain + spacer + gadget chain + e
  CHECK(witness.size() ==
        static_cast<std::size_t>(artifact.certificate.predicted_length(2)));
  CHECK(scsn_to_setcover(sc, witness) == std::vector<int>{0, 1});

  // Duplicates collapse before validation.
  CHECK(setcover_witness(sc, {1, 0, 1}).size() == 37);

  CHECK_THROWS_AS(setcover_witness(sc, {0}), ContractError);  // leaves item 2
  CHECK_THROWS_AS(setcover_witness(sc, {5}), ContractError);
}

TEST_CASE("expanded rules accept exactly the same strings") {
  const SetCover tiny{1, {{0}}};
  const Instance compact = setcover_to_scsn(tiny).instance;
  const std::vector<Pattern> flat_negatives = expand_rules(compact, 2'000'000);
  const Instance flat(compact.alphabet(), compact.positives(), flat_negatives);
  CHECK(flat_negatives.size() >= compact.negatives().size());

  const Pattern witness = setcover_witness(tiny, {0});
  const std::size_t sigma = compact.alphabet().size();
  auto agree = [&](const Pattern& text) {
    const bool a = validate_superstring(compact, text).is_valid();
    const bool b = validate_superstring(flat, text).is_valid();
    CHECK(a == b);
  };

  agree(witness);
  for (std::size_t k = 0; k < witness.size(); ++k) {
    for (Cell c = 0; c < static_cast<Cell>(sigma); ++c) {
      std::vector<Cell> cells = witness.cells();
      cells[k] = c;
      agree(Pattern(std::move(cells)));
    }
  }
  for (std::size_t len = 0; len < witness.size(); ++len)
    agree(Pattern(std::vector<Cell>(witness.cells().begin(),
                                    witness.cells().begin() +
                                        static_cast<std::ptrdiff_t>(len))));
  std::mt19937 rng(77);
  for (int round = 0; round < 30; ++round) {
    const std::size_t len = 1 + rng() % 10;
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < len; ++k)
      cells.push_back(static_cast<Cell>(rng() % sigma));
    agree(Pattern(std::move(cells)));
  }
}
