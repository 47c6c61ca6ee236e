#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scs/instance.hpp"
#include "scs/source_problems.hpp"

namespace scs {

// Records how an instance was compiled from a source problem and what the
// optimal superstring length must be as a function of the source cost.
struct Certificate {
  std::string reduction;                      // e.g. "setcover-scsn"
  std::map<std::string, std::int64_t> params; // source size parameters
  std::string predicted_formula;              // human-readable closed form
  std::int64_t normalization = 1;             // recorded constant
  std::map<std::string, std::string> token_map;  // token -> role (bijective)
  std::vector<std::string> deviations;        // implemented-vs-printed notes

  // Closed-form optimum length at source cost (cover size / weight).
  std::int64_t predicted_length(std::int64_t cost) const;
  // Inverse of predicted_length; throws ExtractionError when `length` is
  // not on the formula's lattice.
  std::int64_t cost_from_length(std::int64_t length) const;
};

std::string write_certificate(const Certificate& certificate);
Certificate read_certificate(const std::string& json_text);

struct ReductionArtifact {
  Instance instance;
  Certificate certificate;
};

struct AffixOptions {
  std::vector<Cell> wildcard_choices;  // empty = full alphabet
  std::optional<Cell> begin_anchor;    // literal first token of valid texts
  std::optional<Cell> end_anchor;      // literal last token of valid texts
};

// Compiles "every occurrence of `center` must extend to one of `allowed`"
// into negative rules. Each allowed member spans prefix_len cells, the
// center, then suffix_len cells, and must equal `center` on the center
// slice. Besides the interior rule [?^u, center, ?^v] (exceptions =
// allowed), anchored variants are emitted for windows that would overhang
// a text that starts with begin_anchor / ends with end_anchor: a member
// survives into such a variant only when its overhanging cells are
// wildcards and its anchor-position cell accepts the anchor token. Rules
// whose exceptions cover their pattern are dropped as vacuous.
std::vector<NegativeRule> affix_rules(const Pattern& center, std::size_t prefix_len,
                                      std::size_t suffix_len,
                                      const std::vector<Pattern>& allowed,
                                      const Alphabet& alphabet,
                                      const AffixOptions& options);

// --- vertex cover -> plain superstring -------------------------------------

ReductionArtifact vc_to_scs(const Graph& g);
// Cover vertices are 0-based. Witness length = 4m + (used cover vertices).
Pattern vc_witness(const Graph& g, const std::vector<int>& cover);
// Reads one covering endpoint per edge out of a valid superstring.
std::vector<int> scs_to_vc(const Graph& g, const Pattern& s);

// --- graph coloring -> superstring with wildcards --------------------------

ReductionArtifact coloring_to_scsw(const Graph& g);
Pattern coloring_witness(const Graph& g, const std::vector<int>& assignment);
std::vector<int> scsw_to_coloring(const Graph& g, const Pattern& s);

// --- set cover -> superstring with forbidden substrings --------------------

ReductionArtifact setcover_to_scsn(const SetCover& sc);
// Chosen sets are 0-based. Witness length = predicted_length(used sets).
Pattern setcover_witness(const SetCover& sc, const std::vector<int>& chosen_sets);
std::vector<int> scsn_to_setcover(const SetCover& sc, const Pattern& s);

// --- minimum-ones 3SAT -> superstring with both features -------------------

ReductionArtifact minones_to_scsnw(const Cnf3& cnf);
Pattern minones_witness(const Cnf3& cnf, const std::vector<bool>& assignment);
std::vector<bool> scsnw_to_assignment(const Cnf3& cnf, const Pattern& s);

}  // namespace scs
