#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "scs/errors.hpp"
#include "scs/instance.hpp"
#include "test_util.hpp"

using namespace scs;
using test::chars_alphabet;
using test::text_of;

namespace {

const Alphabet kAb = chars_alphabet("ab");

NegativeRule make_rule(const std::string& pattern,
                       const std::vector<std::string>& exceptions,
                       std::vector<Cell> choices = {}) {
  NegativeRule r;
  r.pattern = text_of(pattern, kAb);
  for (const auto& e : exceptions) r.exceptions.push_back(text_of(e, kAb));
  r.wildcard_choices = std::move(choices);
  return r;
}

}  // namespace

TEST_CASE("variant follows instance content") {
  CHECK(variant_name(Variant::Scs) == "scs");
  CHECK(variant_name(Variant::Scsnw) == "scsnw");

  const Instance plain(kAb, {text_of("ab", kAb)});
  CHECK(plain.variant() == Variant::Scs);

  const Instance with_neg(kAb, {text_of("ab", kAb)}, {text_of("aa", kAb)});
  CHECK(with_neg.variant() == Variant::Scsn);

  const Instance with_rule(kAb, {text_of("ab", kAb)}, {},
                           {make_rule("?a", {"aa"})});
  CHECK(with_rule.variant() == Variant::Scsn);  // rule wildcards stay compact

  const Instance wild_pos(kAb, {text_of("a?", kAb)});
  CHECK(wild_pos.variant() == Variant::Scsw);

  const Instance wild_neg(kAb, {text_of("ab", kAb)}, {text_of("a?", kAb)});
  CHECK(wild_neg.variant() == Variant::Scsnw);

  const Instance both(kAb, {text_of("a?", kAb)}, {text_of("aa", kAb)});
  CHECK(both.variant() == Variant::Scsnw);
}

TEST_CASE("constructor rejects malformed content") {
  CHECK_THROWS_AS(Instance(kAb, {Pattern({0, 5})}), ContractError);
  CHECK_THROWS_AS(Instance(kAb, {}, {Pattern({-7})}), ContractError);
  CHECK_THROWS_AS(Instance(kAb, {}, {}, {make_rule("", {})}), ContractError);
  CHECK_THROWS_AS(Instance(kAb, {}, {}, {make_rule("?a", {"a"})}),
                  ContractError);  // exception length mismatch
  CHECK_THROWS_AS(Instance(kAb, {}, {}, {make_rule("?a", {}, {0, 0})}),
                  ContractError);  // duplicate choices
  CHECK_THROWS_AS(Instance(kAb, {}, {}, {make_rule("?a", {}, {9})}),
                  ContractError);  // choice outside alphabet
}

TEST_CASE("rule cell and window semantics") {
  CHECK(rule_cell_matches(kWildcard, {}, 1));
  CHECK(rule_cell_matches(kWildcard, {0}, 0));
  CHECK(!rule_cell_matches(kWildcard, {0}, 1));
  CHECK(rule_cell_matches(0, {1}, 0));  // concrete cells ignore choices
  CHECK(!rule_cell_matches(0, {}, 1));

  const NegativeRule r = make_rule("?b", {"ab"});
  const Pattern text = text_of("abb", kAb);
  CHECK(rule_pattern_matches_at(r, text, 0));
  CHECK(exception_matches_at(r.exceptions[0], r.wildcard_choices, text, 0));
  CHECK(!rule_violation_at(r, text, 0));  // absorbed by the exception
  CHECK(rule_violation_at(r, text, 1));

  // Restricted choices narrow what the pattern wildcard accepts.
  const NegativeRule narrow = make_rule("?b", {}, {0});
  CHECK(rule_pattern_matches_at(narrow, text, 0));
  CHECK(!rule_pattern_matches_at(narrow, text, 1));
}

TEST_CASE("validate_superstring reports every defect") {
  const Instance instance(kAb, {text_of("ab", kAb), text_of("ba", kAb)},
                          {text_of("aba", kAb)});

  CHECK(validate_superstring(instance, text_of("abba", kAb)).is_valid());

  ValidationReport rep = validate_superstring(instance, text_of("aba", kAb));
  CHECK(rep.missing_positives.empty());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].source == Violation::Source::Negative);
  CHECK(rep.violations[0].index == 0);
  CHECK(rep.violations[0].position == 0);

  rep = validate_superstring(instance, text_of("abb", kAb));
  CHECK(rep.missing_positives == std::vector<std::size_t>{1});
  CHECK(rep.violations.empty());

  CHECK_THROWS_AS(validate_superstring(instance, text_of("a?a", kAb)),
                  ContractError);
  CHECK_THROWS_AS(validate_superstring(instance, Pattern({0, 9})),
                  ContractError);

  const Instance ruled(kAb, {}, {}, {make_rule("?b", {"ab"})});
  rep = validate_superstring(ruled, text_of("abb", kAb));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].source == Violation::Source::Rule);
  CHECK(rep.violations[0].index == 0);
  CHECK(rep.violations[0].position == 1);
}

TEST_CASE("rule expansion matches the compact semantics") {
  const Instance instance(kAb, {}, {text_of("aa", kAb)},
                          {make_rule("?b", {"ab"})});
  std::vector<Pattern> flat = expand_rules(instance, 100);
  REQUIRE(flat.size() == 2);
  CHECK(flat[0] == text_of("aa", kAb));  // plain negatives first
  CHECK(flat[1] == text_of("bb", kAb));

  CHECK_THROWS_AS(expand_rules(instance, 1), SizeGuardError);

  // Restricted choices expand pattern and exceptions over the same set.
  const Instance narrowed(kAb, {}, {}, {make_rule("?b", {"ab"}, {0})});
  CHECK(expand_rules(narrowed, 100).empty());

  CHECK(instance.expanded_negative_estimate() == 3);  // 1 plain + 2 fillings
  CHECK(narrowed.expanded_negative_estimate() == 1);
}

TEST_CASE("instance JSON roundtrip preserves every field") {
  const Alphabet multi({"c1", "x", "longtok"});
  const Pattern pos = Pattern::from_tokens({"c1", "?", "longtok"}, multi);
  const Pattern neg = Pattern::from_tokens({"x", "x"}, multi);
  NegativeRule rule;
  rule.pattern = Pattern::from_tokens({"?", "c1"}, multi);
  rule.exceptions = {Pattern::from_tokens({"x", "c1"}, multi)};
  rule.wildcard_choices = {0, 1};
  const Instance original(multi, {pos}, {neg}, {rule});

  const std::string json_text = write_instance(original);
  const Instance back = read_instance(json_text);
  CHECK(back.alphabet() == original.alphabet());
  REQUIRE(back.positives().size() == 1);
  CHECK(back.positives()[0] == pos);
  REQUIRE(back.negatives().size() == 1);
  CHECK(back.negatives()[0] == neg);
  REQUIRE(back.rules().size() == 1);
  CHECK(back.rules()[0].pattern == rule.pattern);
  CHECK(back.rules()[0].exceptions == rule.exceptions);
  CHECK(back.rules()[0].wildcard_choices == rule.wildcard_choices);

  const nlohmann::json j = nlohmann::json::parse(json_text);
  CHECK(j["wildcard"] == "?");
  CHECK(j["alphabet"].size() == 3);
  CHECK(j["positives"][0].is_array());
}

TEST_CASE("instance JSON reader conveniences and failures") {
  const Instance compact = read_instance(
      R"({"alphabet":["a","b"],"positives":["ab","?a"],"negatives":["bb"]})");
  CHECK(compact.positives().size() == 2);
  CHECK(compact.positives()[1] == text_of("?a", kAb));
  CHECK(compact.negatives()[0] == text_of("bb", kAb));

  CHECK_THROWS_AS(read_instance("not json"), ParseError);
  CHECK_THROWS_AS(read_instance(R"({"positives":[]})"), ParseError);
  CHECK_THROWS_AS(read_instance(R"({"alphabet":["a"],"wildcard":"*"})"),
                  ParseError);
  CHECK_THROWS_AS(read_instance(R"({"alphabet":["a"],"positives":["b"]})"),
                  ParseError);
  CHECK_THROWS_AS(read_instance(R"({"alphabet":["a","a"],"positives":[]})"),
                  ParseError);  // contract failures surface as parse errors
  CHECK_THROWS_AS(read_instance(R"({"alphabet":["a"],"rules":[{}]})"),
                  ParseError);
}
