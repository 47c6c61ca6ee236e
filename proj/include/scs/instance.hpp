#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scs/alphabet.hpp"
#include "scs/pattern.hpp"

namespace scs {

// Which features an instance actually uses. Derived from content:
// negatives/rules present => forbidden-substring constraints; wildcards in
// positives or plain negatives => wildcard matching. Rule wildcards are
// compact shorthand for expanded plain negatives and do not count.
enum class Variant { Scs, Scsn, Scsw, Scsnw };

std::string variant_name(Variant v);

// A compact family of forbidden substrings: every completion of `pattern`
// is forbidden except those matching one of `exceptions`. Wildcards in the
// pattern and in the exceptions range over `wildcard_choices` (empty means
// the full alphabet).
struct NegativeRule {
  Pattern pattern;
  std::vector<Pattern> exceptions;
  std::vector<Cell> wildcard_choices;
};

// Cell-level matcher for rule semantics: a wildcard accepts `text_cell`
// only when it lies in `choices` (or choices is empty).
bool rule_cell_matches(Cell pattern_cell, const std::vector<Cell>& choices,
                       Cell text_cell);

bool rule_pattern_matches_at(const NegativeRule& rule, const Pattern& text,
                             std::size_t pos);
bool exception_matches_at(const Pattern& exception,
                          const std::vector<Cell>& choices, const Pattern& text,
                          std::size_t pos);
// Pattern matches and no exception does.
bool rule_violation_at(const NegativeRule& rule, const Pattern& text,
                       std::size_t pos);

struct Violation {
  enum class Source { Negative, Rule };
  Source source = Source::Negative;
  std::size_t index = 0;     // into negatives() or rules()
  std::size_t position = 0;  // offset in the candidate string
};

struct ValidationReport {
  std::vector<std::size_t> missing_positives;
  std::vector<Violation> violations;
  bool is_valid() const { return missing_positives.empty() && violations.empty(); }
};

class Instance {
 public:
  Instance() = default;
  Instance(Alphabet alphabet, std::vector<Pattern> positives,
           std::vector<Pattern> negatives = {},
           std::vector<NegativeRule> rules = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pattern>& positives() const { return positives_; }
  const std::vector<Pattern>& negatives() const { return negatives_; }
  const std::vector<NegativeRule>& rules() const { return rules_; }

  Variant variant() const;

  std::uint64_t expansion_budget() const { return expansion_budget_; }
  void set_expansion_budget(std::uint64_t budget) { expansion_budget_ = budget; }

  // Saturating upper bound on the number of plain negatives after
  // expanding every rule (ignores exception removal).
  std::uint64_t expanded_negative_estimate() const;

 private:
  Alphabet alphabet_;
  std::vector<Pattern> positives_;
  std::vector<Pattern> negatives_;
  std::vector<NegativeRule> rules_;
  std::uint64_t expansion_budget_ = 1'000'000;
};

// Scans `candidate` directly against every constraint. Deliberately
// independent of the incremental tracker so the two can cross-check.
// Throws ContractError when `candidate` has wildcards or foreign cells.
ValidationReport validate_superstring(const Instance& instance,
                                      const Pattern& candidate);

// Replaces every rule by its expanded plain negatives (pattern expansions
// minus all exception expansions, lexicographic order preserved). Existing
// plain negatives come first. Throws SizeGuardError beyond `cap`.
std::vector<Pattern> expand_rules(const Instance& instance, std::uint64_t cap);

// JSON serialization. The canonical written form uses token arrays; the
// reader additionally accepts plain strings for single-char tokens.
Instance read_instance(const std::string& json_text);
std::string write_instance(const Instance& instance);

}  // namespace scs
