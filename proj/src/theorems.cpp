#include "welfarekit/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace welfarekit {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

SolutionSet intersect(const SolutionSet& a, const SolutionSet& b) {
  SolutionSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const SolutionSet& set, int a) {
  return std::binary_search(set.begin(), set.end(), a);
}

}  // namespace

ImpossibilityScenario::ImpossibilityScenario(Rational alpha_value, Rational beta_value,
                                             Rational p1_value, Rational p2_value)
    : alpha(std::move(alpha_value)),
      beta(std::move(beta_value)),
      p1(std::move(p1_value)),
      p2(std::move(p2_value)) {
  require(alpha >= beta, "scenario needs alpha >= beta");
  require(p1 > Rational(1, 2) && p1 < 1, "p1 must lie strictly between 1/2 and 1");
  require(p2 > 0 && p2 < Rational(1, 2), "p2 must lie strictly between 0 and 1/2");
}

ImpossibilityReport impossibility_demo(const ImpossibilityScenario& scenario,
                                       const SolutionConcept& concept_id) {
  const Rational& a = scenario.alpha;
  const Rational& b = scenario.beta;
  UtilityProfile u(std::vector<std::vector<Rational>>{{a, b}, {b, a}});
  const Permutation swap = Permutation::transposition(2, 0, 1);
  UtilityProfile v = permute(u, swap);  // [[b, a], [a, b]]
  const BeliefMatrix beliefs({scenario.p1, scenario.p2});

  UtilityProfile e1 = subjective_mix(u, v, beliefs);
  UtilityProfile e2 = subjective_mix(v, u, beliefs);

  SolutionSet phi_u = evaluate(concept_id, u);
  SolutionSet phi_v = evaluate(concept_id, v);
  SolutionSet common = intersect(phi_u, phi_v);
  SolutionSet m1 = unanimous(e1);
  SolutionSet m2 = unanimous(e2);

  AxiomVerdict ne = check_nonemptiness(concept_id, u);
  AxiomVerdict anon = check_anonymity(concept_id, u, swap);
  AxiomVerdict sec_fwd = check_sec(concept_id, u, v, beliefs);
  AxiomVerdict sec_rev = check_sec(concept_id, v, u, beliefs);
  AxiomVerdict una_e1 = check_unanimity(concept_id, e1);
  AxiomVerdict una_e2 = check_unanimity(concept_id, e2);

  const bool binding = !m1.empty() && !m2.empty() && intersect(m1, m2).empty();
  const bool some_failure = !ne.holds || !anon.holds || !sec_fwd.holds || !sec_rev.holds ||
                            !una_e1.holds || !una_e2.holds;

  return ImpossibilityReport{
      scenario,
      concept_id,
      std::move(u),
      std::move(v),
      std::move(e1),
      std::move(e2),
      std::move(phi_u),
      std::move(phi_v),
      std::move(common),
      std::move(m1),
      std::move(m2),
      std::move(ne),
      std::move(anon),
      std::move(sec_fwd),
      std::move(sec_rev),
      std::move(una_e1),
      std::move(una_e2),
      binding,
      binding && some_failure,
  };
}

Lemma1Report lemma1_check(const SolutionConcept& concept_id,
                          const std::vector<UtilityProfile>& profiles, int target) {
  require(profiles.size() >= 2, "lemma replay needs at least two profiles");
  for (size_t j = 1; j < profiles.size(); ++j) {
    require(profiles[0].composable_with(profiles[j]), "lemma profiles must be composable");
  }
  require(target >= 0 && target < profiles[0].n_alternatives(),
          "target alternative outside the profiles' range");

  std::vector<SolutionSet> premise_sets;
  premise_sets.reserve(profiles.size());
  bool premise_holds = true;
  for (const UtilityProfile& p : profiles) {
    premise_sets.push_back(evaluate(concept_id, p));
    premise_holds = premise_holds && contains(premise_sets.back(), target);
  }

  std::vector<Lemma1Step> steps;
  UtilityProfile average = profiles.front();
  for (size_t k = 1; k < profiles.size(); ++k) {
    MixtureWeight weight(Rational(static_cast<long>(k), static_cast<long>(k + 1)));
    average = mix(average, profiles[k], weight);
    SolutionSet selected = evaluate(concept_id, average);
    const bool keeps = contains(selected, target);
    steps.push_back(Lemma1Step{static_cast<int>(k), weight, average, std::move(selected), keeps});
  }

  SolutionSet final_set = evaluate(concept_id, average);
  // Vacuous pass when the premise fails; otherwise the verdict is about the
  // final uniform average (the steps keep their own per-fold flags).
  const bool passed = !premise_holds || contains(final_set, target);
  return Lemma1Report{concept_id,        target,
                      std::move(premise_sets), premise_holds,
                      std::move(steps),  std::move(average),
                      std::move(final_set),    passed};
}

CharacterizationTrace characterization_trace(const UtilityProfile& u, AggregateMode mode) {
  const SolutionConcept base_concept =
      mode == AggregateMode::Sum ? SolutionConcept::bentham() : SolutionConcept::rawls();
  SolutionSet base_solution = evaluate(base_concept, u);

  bool anonymity_preserved = true;
  const Permutation step = Permutation::cyclic(u.n_agents());
  Permutation power = step;
  for (int k = 1; k < u.n_agents(); ++k) {
    if (evaluate(base_concept, permute(u, power)) != base_solution) {
      anonymity_preserved = false;
      break;
    }
    power = power.then(step);
  }

  UtilityProfile aggregate =
      mode == AggregateMode::Sum ? cyclic_aggregate_sum(u) : cyclic_aggregate_min(u);
  bool agent_constant = true;
  for (int i = 1; i < aggregate.n_agents() && agent_constant; ++i) {
    for (int s = 0; s < aggregate.n_alternatives(); ++s) {
      if (aggregate.value(i, s) != aggregate.value(0, s)) {
        agent_constant = false;
        break;
      }
    }
  }

  SolutionSet aggregate_unanimous = unanimous(aggregate);
  const bool unanimous_matches = aggregate_unanimous == base_solution;
  const bool passed = anonymity_preserved && agent_constant && unanimous_matches;
  return CharacterizationTrace{mode,
                               u,
                               std::move(aggregate),
                               std::move(base_solution),
                               anonymity_preserved,
                               agent_constant,
                               std::move(aggregate_unanimous),
                               unanimous_matches,
                               passed};
}

const std::vector<Axiom>& table_axioms() {
  static const std::vector<Axiom> axioms = {
      Axiom::Nonemptiness,  Axiom::Anonymity,
      Axiom::Unanimity,     Axiom::Continuity,
      Axiom::ObjectiveExpectedConsistency, Axiom::MinimumConsistency,
  };
  return axioms;
}

IndependenceTable independence_table(const SearchConfig& cfg) {
  cfg.validate();
  IndependenceTable table{standard_concepts(), table_axioms(), {}, cfg};
  table.cells.reserve(table.concepts.size());
  for (const SolutionConcept& concept_id : table.concepts) {
    std::vector<TableCell> row;
    row.reserve(table.axioms.size());
    for (Axiom axiom : table.axioms) {
      SearchResult result = search_counterexample(concept_id, axiom, cfg);
      TableCell cell;
      cell.status = result.witness ? CellStatus::Violated : CellStatus::Holds;
      cell.trials = result.trials;
      cell.witness = std::move(result.witness);
      row.push_back(std::move(cell));
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

std::array<std::array<bool, 6>, 7> reference_pattern() {
  // Rows: unanimous, dictator:0, anti-bentham, sub-rawls, sub-bentham, rawls,
  // bentham.  Columns: NE, A, U, C, OEC, MC.
  return {{
      {false, true, true, true, true, true},
      {true, false, true, true, true, true},
      {true, true, false, true, true, false},
      {true, true, true, false, false, true},
      {true, true, true, false, true, false},
      {true, true, true, true, false, true},
      {true, true, true, true, true, false},
  }};
}

std::vector<TableMismatch> compare_to_reference(const IndependenceTable& table) {
  const auto expected = reference_pattern();
  std::vector<TableMismatch> mismatches;
  for (size_t row = 0; row < table.cells.size() && row < expected.size(); ++row) {
    for (size_t col = 0; col < table.cells[row].size() && col < expected[row].size(); ++col) {
      const bool holds = table.cells[row][col].status == CellStatus::Holds;
      if (holds != expected[row][col]) {
        mismatches.push_back(TableMismatch{static_cast<int>(row), static_cast<int>(col), holds,
                                           expected[row][col]});
      }
    }
  }
  return mismatches;
}

}  // namespace welfarekit
