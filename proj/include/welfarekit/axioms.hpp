#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "welfarekit/profile.hpp"
#include "welfarekit/solutions.hpp"

namespace welfarekit {

enum class Axiom {
  Nonemptiness,
  Anonymity,
  Unanimity,
  Continuity,
  SubjectiveExpectedConsistency,
  ObjectiveExpectedConsistency,
  MinimumConsistency,
};

// "nonemptiness", "anonymity", ..., "objective-expected-consistency".
std::string axiom_name(Axiom axiom);
// Table column headers: "NE", "A", "U", "C", "SEC", "OEC", "MC".
std::string axiom_short_name(Axiom axiom);
// Accepts the long name or the short one (case-insensitive).
Axiom parse_axiom(const std::string& text);

// One asserted membership, e.g. "s2 in phi(mix(u, v; 1/2)): no".  A witness's
// fact list spells out exactly why the axiom instance fails, and replaying the
// encoded checker re-derives the same conclusion.
struct MembershipFact {
  std::string set_expr;
  int alternative = 0;
  bool member = false;
};

// A self-contained refutation of one axiom instance.  The populated fields
// depend on the axiom: anonymity carries the permutation, the consistency
// axioms carry the second profile plus weight/beliefs, continuity carries the
// perturbation family instead of a plain profile.
struct Witness {
  Axiom axiom = Axiom::Nonemptiness;
  std::vector<UtilityProfile> profiles;
  std::optional<Permutation> permutation;
  std::optional<MixtureWeight> weight;
  std::optional<BeliefMatrix> beliefs;
  std::optional<PerturbationFamily> family;
  int tail_from = 0;
  std::optional<int> violating_alternative;
  std::vector<MembershipFact> facts;
};

// Outcome of a single axiom check.  `trials` counts the substantive
// comparisons the checker performed; a consistency check whose premise set is
// empty passes with zero trials and says so in `note`.
struct AxiomVerdict {
  Axiom axiom;
  SolutionConcept concept_id;
  bool holds = true;
  long long trials = 0;
  std::optional<Witness> witness;
  std::string note;
};

// Bounds for the counterexample search.  The exhaustive phase enumerates all
// profiles with entries from `grid`, n in [2, max_agents], m in
// [1, max_alternatives]; the random phase then draws `random_trials` extra
// cases from the same grid with a deterministic generator.
struct SearchConfig {
  std::vector<Rational> grid = {Rational(0), Rational(1), Rational(2)};
  int max_agents = 2;
  int max_alternatives = 3;
  long long random_trials = 10000;
  std::uint64_t seed = 0;
  std::vector<Rational> weight_grid = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  // Offsets for continuity families; strictly decreasing positive.
  std::vector<Rational> epsilon_ladder = {Rational(1, 2), Rational(1, 4), Rational(1, 8),
                                          Rational(1, 16)};

  void validate() const;  // throws std::invalid_argument on bad bounds
};

// phi(u) != {} .
AxiomVerdict check_nonemptiness(const SolutionConcept& concept_id, const UtilityProfile& u);

// phi(u_sigma) == phi(u).  With sigma given, that single comparison; without
// it, all n! permutations when n <= exhaustive_bound, otherwise
// cfg.random_trials sampled permutations.
AxiomVerdict check_anonymity(const SolutionConcept& concept_id, const UtilityProfile& u,
                             const std::optional<Permutation>& sigma = std::nullopt,
                             const SearchConfig& cfg = {}, int exhaustive_bound = 5);

// If the unanimous set is nonempty, phi(u) must sit inside it; vacuous pass
// otherwise.
AxiomVerdict check_unanimity(const SolutionConcept& concept_id, const UtilityProfile& u);

// Sequence refutation: some alternative selected at every family member from
// tail_from on, but not selected at the base profile.  A Pass means this
// family does not refute continuity (it proves nothing stronger).
AxiomVerdict check_continuity(const SolutionConcept& concept_id, const PerturbationFamily& family,
                              int tail_from = 0);

// phi(u) ∩ phi(v) ⊆ phi(subjective_mix(u, v, beliefs)).
AxiomVerdict check_sec(const SolutionConcept& concept_id, const UtilityProfile& u,
                       const UtilityProfile& v, const BeliefMatrix& beliefs);

// phi(u) ∩ phi(v) ⊆ phi(mix(u, v, w)).
AxiomVerdict check_oec(const SolutionConcept& concept_id, const UtilityProfile& u,
                       const UtilityProfile& v, const MixtureWeight& w);

// phi(u) ∩ phi(v) ⊆ phi(meet(u, v)).
AxiomVerdict check_mc(const SolutionConcept& concept_id, const UtilityProfile& u,
                      const UtilityProfile& v);

struct SearchResult {
  std::optional<Witness> witness;  // first refutation in enumeration order
  long long trials = 0;            // axiom instances checked
};

// Deterministic counterexample search: exhaustive grid phase in a fixed
// enumeration order, then the seeded random phase.  Returns the first witness
// found (already re-validated through the public checker) or none.
SearchResult search_counterexample(const SolutionConcept& concept_id, Axiom axiom,
                                   const SearchConfig& cfg = {});

// Re-runs the checker an existing witness encodes, on the witness's own data.
// For a genuine witness the verdict comes back as a Fail.
AxiomVerdict replay(const SolutionConcept& concept_id, const Witness& witness);

}  // namespace welfarekit
