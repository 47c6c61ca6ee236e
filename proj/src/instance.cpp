#include "scs/instance.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "scs/errors.hpp"

namespace scs {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Scs: return "scs";
    case Variant::Scsn: return "scsn";
    case Variant::Scsw: return "scsw";
    case Variant::Scsnw: return "scsnw";
  }
  return "scs";
}

namespace {

void check_pattern_cells(const Pattern& p, const Alphabet& alphabet,
                         const char* role) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Cell c = p[i];
    if (c != kWildcard && !alphabet.valid_cell(c))
      throw ContractError(std::string(role) + " pattern has a cell outside the alphabet");
  }
}

}  // namespace

Instance::Instance(Alphabet alphabet, std::vector<Pattern> positives,
                   std::vector<Pattern> negatives, std::vector<NegativeRule> rules)
    : alphabet_(std::move(alphabet)),
      positives_(std::move(positives)),
      negatives_(std::move(negatives)),
      rules_(std::move(rules)) {
  for (const auto& p : positives_) check_pattern_cells(p, alphabet_, "positive");
  for (const auto& n : negatives_) check_pattern_cells(n, alphabet_, "negative");
  for (const auto& r : rules_) {
    check_pattern_cells(r.pattern, alphabet_, "rule");
    if (r.pattern.empty()) throw ContractError("rule pattern must be non-empty");
    for (const auto& e : r.exceptions) {
      check_pattern_cells(e, alphabet_, "rule exception");
      if (e.size() != r.pattern.size())
        throw ContractError("rule exception length must equal the pattern length");
    }
    std::unordered_set<Cell> seen;
    for (Cell c : r.wildcard_choices) {
      if (!alphabet_.valid_cell(c))
        throw ContractError("rule wildcard choice outside the alphabet");
      if (!seen.insert(c).second)
        throw ContractError("rule wildcard choices must be distinct");
    }
  }
}

Variant Instance::variant() const {
  const bool negatives_used = !negatives_.empty() || !rules_.empty();
  bool wildcards_used = false;
  for (const auto& p : positives_)
    if (!p.is_text()) wildcards_used = true;
  for (const auto& n : negatives_)
    if (!n.is_text()) wildcards_used = true;
  if (negatives_used && wildcards_used) return Variant::Scsnw;
  if (negatives_used) return Variant::Scsn;
  if (wildcards_used) return Variant::Scsw;
  return Variant::Scs;
}

std::uint64_t Instance::expanded_negative_estimate() const {
  const std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t total = negatives_.size();
  for (const auto& r : rules_) {
    const std::uint64_t base =
        r.wildcard_choices.empty() ? alphabet_.size() : r.wildcard_choices.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < r.pattern.wildcard_count(); ++i) {
      if (base != 0 && count > kMax / base) {
        count = kMax;
        break;
      }
      count *= base;
    }
    total = (total > kMax - count) ? kMax : total + count;
  }
  return total;
}

bool rule_cell_matches(Cell pattern_cell, const std::vector<Cell>& choices,
                       Cell text_cell) {
  if (pattern_cell == kWildcard) {
    if (choices.empty()) return true;
    return std::find(choices.begin(), choices.end(), text_cell) != choices.end();
  }
  return pattern_cell == text_cell;
}

bool rule_pattern_matches_at(const NegativeRule& rule, const Pattern& text,
                             std::size_t pos) {
  if (pos + rule.pattern.size() > text.size()) return false;
  for (std::size_t j = 0; j < rule.pattern.size(); ++j)
    if (!rule_cell_matches(rule.pattern[j], rule.wildcard_choices, text[pos + j]))
      return false;
  return true;
}

bool exception_matches_at(const Pattern& exception,
                          const std::vector<Cell>& choices, const Pattern& text,
                          std::size_t pos) {
  if (pos + exception.size() > text.size()) return false;
  for (std::size_t j = 0; j < exception.size(); ++j)
    if (!rule_cell_matches(exception[j], choices, text[pos + j])) return false;
  return true;
}

bool rule_violation_at(const NegativeRule& rule, const Pattern& text,
                       std::size_t pos) {
  if (!rule_pattern_matches_at(rule, text, pos)) return false;
  for (const auto& e : rule.exceptions)
    if (exception_matches_at(e, rule.wildcard_choices, text, pos)) return false;
  return true;
}

ValidationReport validate_superstring(const Instance& instance,
                                      const Pattern& candidate) {
  if (!candidate.is_text())
    throw ContractError("candidate superstring must be wildcard-free");
  for (std::size_t i = 0; i < candidate.size(); ++i)
    if (!instance.alphabet().valid_cell(candidate[i]))
      throw ContractError("candidate superstring has a cell outside the alphabet");

  ValidationReport report;
  const auto& positives = instance.positives();
  for (std::size_t i = 0; i < positives.size(); ++i)
    if (occurrences(positives[i], candidate).empty())
      report.missing_positives.push_back(i);

  const auto& negatives = instance.negatives();
  for (std::size_t i = 0; i < negatives.size(); ++i)
    for (std::size_t pos : occurrences(negatives[i], candidate))
      report.violations.push_back({Violation::Source::Negative, i, pos});

  const auto& rules = instance.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].pattern.size() > candidate.size()) continue;
    for (std::size_t pos = 0; pos + rules[i].pattern.size() <= candidate.size();
         ++pos)
      if (rule_violation_at(rules[i], candidate, pos))
        report.violations.push_back({Violation::Source::Rule, i, pos});
  }
  return report;
}

std::vector<Pattern> expand_rules(const Instance& instance, std::uint64_t cap) {
  std::vector<Pattern> out = instance.negatives();
  if (out.size() > cap) throw SizeGuardError("expanded negative set exceeds the budget");
  for (const auto& rule : instance.rules()) {
    const std::vector<Cell> choices = rule.wildcard_choices.empty()
                                          ? instance.alphabet().all_cells()
                                          : rule.wildcard_choices;
    const std::span<const Cell> span(choices);
    std::vector<Pattern> members = expansions(rule.pattern, span, cap);
    std::set<Pattern> removed;
    for (const auto& e : rule.exceptions) {
      for (auto& x : expansions(e, span, cap)) removed.insert(std::move(x));
    }
    for (auto& m : members) {
      if (removed.count(m)) continue;
      if (out.size() >= cap)
        throw SizeGuardError("expanded negative set exceeds the budget");
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> tokens_from_json(const Json& j) {
  std::vector<std::string> tokens;
  if (j.is_string()) {
    // Convenience form: one character per token.
    for (char ch : j.get<std::string>()) tokens.emplace_back(1, ch);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_string()) throw ParseError("token arrays must contain strings");
      tokens.push_back(e.get<std::string>());
    }
  } else {
    throw ParseError("a token string must be an array of tokens or a plain string");
  }
  return tokens;
}

Json tokens_to_json(const Pattern& p, const Alphabet& alphabet) {
  Json arr = Json::array();
  for (const auto& tok : p.to_tokens(alphabet)) arr.push_back(tok);
  return arr;
}

}  // namespace

Instance read_instance(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid instance JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance JSON must be an object");
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw ParseError("instance JSON needs an \"alphabet\" array");

  std::vector<std::string> alphabet_tokens;
  for (const auto& e : j["alphabet"]) {
    if (!e.is_string()) throw ParseError("alphabet entries must be strings");
    alphabet_tokens.push_back(e.get<std::string>());
  }
  const Alphabet alphabet = [&] {
    try {
      return Alphabet(std::move(alphabet_tokens));
    } catch (const ContractError& e) {
      throw ParseError(e.what());
    }
  }();

  if (j.contains("wildcard")) {
    if (!j["wildcard"].is_string() ||
        j["wildcard"].get<std::string>() != kWildcardToken)
      throw ParseError("the wildcard token is fixed to \"?\"");
  }

  auto parse_pattern = [&](const Json& e) {
    return Pattern::from_tokens(tokens_from_json(e), alphabet);
  };

  std::vector<Pattern> positives;
  if (j.contains("positives")) {
    if (!j["positives"].is_array()) throw ParseError("\"positives\" must be an array");
    for (const auto& e : j["positives"]) positives.push_back(parse_pattern(e));
  }
  std::vector<Pattern> negatives;
  if (j.contains("negatives")) {
    if (!j["negatives"].is_array()) throw ParseError("\"negatives\" must be an array");
    for (const auto& e : j["negatives"]) negatives.push_back(parse_pattern(e));
  }
  std::vector<NegativeRule> rules;
  if (j.contains("rules")) {
    if (!j["rules"].is_array()) throw ParseError("\"rules\" must be an array");
    for (const auto& e : j["rules"]) {
      if (!e.is_object() || !e.contains("pattern"))
        throw ParseError("each rule needs a \"pattern\"");
      NegativeRule rule;
      rule.pattern = parse_pattern(e["pattern"]);
      if (e.contains("except")) {
        if (!e["except"].is_array()) throw ParseError("rule \"except\" must be an array");
        for (const auto& x : e["except"]) rule.exceptions.push_back(parse_pattern(x));
      }
      if (e.contains("choices")) {
        if (!e["choices"].is_array())
          throw ParseError("rule \"choices\" must be an array of tokens");
        for (const auto& x : e["choices"]) {
          if (!x.is_string()) throw ParseError("rule \"choices\" must be an array of tokens");
          auto c = alphabet.find(x.get<std::string>());
          if (!c) throw ParseError("rule choice not in alphabet: " + x.get<std::string>());
          rule.wildcard_choices.push_back(*c);
        }
      }
      rules.push_back(std::move(rule));
    }
  }

  try {
    return Instance(std::move(alphabet), std::move(positives), std::move(negatives),
                    std::move(rules));
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

std::string write_instance(const Instance& instance) {
  const Alphabet& alphabet = instance.alphabet();
  Json j = Json::object();
  j["alphabet"] = Json::array();
  for (const auto& tok : alphabet.tokens()) j["alphabet"].push_back(tok);
  j["wildcard"] = kWildcardToken;
  j["positives"] = Json::array();
  for (const auto& p : instance.positives())
    j["positives"].push_back(tokens_to_json(p, alphabet));
  j["negatives"] = Json::array();
  for (const auto& n : instance.negatives())
    j["negatives"].push_back(tokens_to_json(n, alphabet));
  j["rules"] = Json::array();
  for (const auto& r : instance.rules()) {
    Json jr = Json::object();
    jr["pattern"] = tokens_to_json(r.pattern, alphabet);
    jr["except"] = Json::array();
    for (const auto& e : r.exceptions) jr["except"].push_back(tokens_to_json(e, alphabet));
    if (!r.wildcard_choices.empty()) {
      Json jc = Json::array();
      for (Cell c : r.wildcard_choices) jc.push_back(alphabet.token(c));
      jr["choices"] = jc;
    }
    j["rules"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

}  // namespace scs
