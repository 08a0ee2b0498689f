#pragma once

#include <array>

#include "welfarekit/axioms.hpp"

namespace welfarekit {

// The two-agent, two-alternative scenario behind the impossibility demo:
// u = [[alpha, beta], [beta, alpha]], v is u with the agents swapped, and the
// agents hold opposed beliefs p1 in (1/2, 1), p2 in (0, 1/2) about which of
// the two profiles is real.  alpha = beta is allowed; it produces a scenario
// that does not bind (no contradiction).
struct ImpossibilityScenario {
  Rational alpha;
  Rational beta;
  Rational p1;
  Rational p2;

  ImpossibilityScenario(Rational alpha_value, Rational beta_value, Rational p1_value,
                        Rational p2_value);
};

// Full trace of the impossibility argument instantiated at one concept: the
// anonymity and nonemptiness steps force a common selection from u and v, the
// two subjective-expectation steps push it into both expectation profiles,
// and unanimity pins those to opposite singletons.  Something has to give;
// the verdicts show what gave for this concept.
struct ImpossibilityReport {
  ImpossibilityScenario scenario;
  SolutionConcept concept_id;
  UtilityProfile u;
  UtilityProfile v;
  UtilityProfile expectation1;  // subjective_mix(u, v, beliefs)
  UtilityProfile expectation2;  // subjective_mix(v, u, beliefs)
  SolutionSet phi_u;
  SolutionSet phi_v;
  SolutionSet common;            // phi(u) ∩ phi(v)
  SolutionSet unanimous1;        // M(expectation1)
  SolutionSet unanimous2;        // M(expectation2)
  AxiomVerdict nonemptiness_u;
  AxiomVerdict anonymity_swap;   // phi(u) vs phi(u with agents swapped) = phi(v)
  AxiomVerdict sec_forward;      // common ⊆ phi(expectation1)?
  AxiomVerdict sec_reverse;      // common ⊆ phi(expectation2)?
  AxiomVerdict unanimity_e1;
  AxiomVerdict unanimity_e2;
  bool scenario_binding = false;          // M(E1), M(E2) nonempty and disjoint
  bool contradiction_established = false;  // binding and some axiom instance failed
};

ImpossibilityReport impossibility_demo(const ImpossibilityScenario& scenario,
                                       const SolutionConcept& concept_id);

// One fold of the step-by-step uniform average: after `index` folds the
// running profile is the average of the first index+1 inputs.
struct Lemma1Step {
  int index;
  MixtureWeight weight;  // index/(index+1)
  UtilityProfile average;
  SolutionSet selected;
  bool keeps_target;
};

// Replays the averaging lemma: if `target` is selected at every input
// profile, it stays selected at every intermediate average and at the final
// uniform average — checked, not assumed.
struct Lemma1Report {
  SolutionConcept concept_id;
  int target;
  std::vector<SolutionSet> premise_sets;  // phi at each input profile
  bool premise_holds;
  std::vector<Lemma1Step> steps;
  UtilityProfile average;  // final uniform average
  SolutionSet final_set;
  bool passed;
};

Lemma1Report lemma1_check(const SolutionConcept& concept_id,
                          const std::vector<UtilityProfile>& profiles, int target);

enum class AggregateMode { Sum, Min };

// Replays the two characterization arguments on a concrete profile: the
// cyclic aggregate collapses the profile to an agent-constant one whose
// unanimous set coincides with bentham(u) (Sum mode) or rawls(u) (Min mode),
// and the base solution is unchanged by every cyclic relabeling.
struct CharacterizationTrace {
  AggregateMode mode;
  UtilityProfile input;
  UtilityProfile aggregate;
  SolutionSet base_solution;  // bentham(u) or rawls(u)
  bool anonymity_preserved;
  bool aggregate_agent_constant;
  SolutionSet aggregate_unanimous;  // M(aggregate)
  bool unanimous_matches;
  bool passed;
};

CharacterizationTrace characterization_trace(const UtilityProfile& u, AggregateMode mode);

enum class CellStatus { Holds, Violated };

struct TableCell {
  CellStatus status = CellStatus::Holds;
  long long trials = 0;
  std::optional<Witness> witness;
};

// The 7x6 independence table: rows are the standard concepts, columns the six
// table axioms, each cell the outcome of a full counterexample search.
struct IndependenceTable {
  std::vector<SolutionConcept> concepts;
  std::vector<Axiom> axioms;
  std::vector<std::vector<TableCell>> cells;  // [row][column]
  SearchConfig config;
};

// Column order: NE, A, U, C, OEC, MC.
const std::vector<Axiom>& table_axioms();

IndependenceTable independence_table(const SearchConfig& cfg = {});

// The reference pattern the table is compared against (true = Holds), in the
// same row and column order as independence_table produces.
std::array<std::array<bool, 6>, 7> reference_pattern();

struct TableMismatch {
  int row;
  int column;
  bool computed_holds;
  bool reference_holds;
};

std::vector<TableMismatch> compare_to_reference(const IndependenceTable& table);

}  // namespace welfarekit
