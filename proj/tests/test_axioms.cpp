#include <stdexcept>

#include "doctest.h"
#include "welfarekit/axioms.hpp"

using namespace welfarekit;

namespace {

UtilityProfile grid22(long a, long b, long c, long d) {
  return UtilityProfile({{Rational(a), Rational(b)}, {Rational(c), Rational(d)}});
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("axiom names round-trip") {
  for (Axiom axiom : {Axiom::Nonemptiness, Axiom::Anonymity, Axiom::Unanimity, Axiom::Continuity,
                      Axiom::SubjectiveExpectedConsistency, Axiom::ObjectiveExpectedConsistency,
                      Axiom::MinimumConsistency}) {
    CHECK(parse_axiom(axiom_name(axiom)) == axiom);
    CHECK(parse_axiom(axiom_short_name(axiom)) == axiom);
  }
  CHECK(parse_axiom("oec") == Axiom::ObjectiveExpectedConsistency);
  CHECK(parse_axiom("NONEMPTINESS") == Axiom::Nonemptiness);
  CHECK_THROWS_AS(parse_axiom("bogus"), std::invalid_argument);
}

TEST_CASE("nonemptiness") {
  auto ok = check_nonemptiness(SolutionConcept::bentham(), grid22(1, 0, 0, 1));
  CHECK(ok.holds);
  CHECK(ok.trials == 1);

  // agents rank the two alternatives oppositely: nothing is unanimously best
  auto bad = check_nonemptiness(SolutionConcept::unanimous(), grid22(0, 1, 1, 0));
  CHECK_FALSE(bad.holds);
  CHECK(bad.trials == 1);
  REQUIRE(bad.witness.has_value());
  CHECK_FALSE(bad.witness->violating_alternative.has_value());
  CHECK(bad.witness->facts.size() == 2);
  CHECK(bad.note == "solution set is empty");
}

TEST_CASE("anonymity with an explicit permutation") {
  Permutation swap = Permutation::transposition(2, 0, 1);
  UtilityProfile u = grid22(0, 1, 1, 0);

  auto sym = check_anonymity(SolutionConcept::bentham(), u, swap);
  CHECK(sym.holds);
  CHECK(sym.trials == 1);

  auto dict = check_anonymity(SolutionConcept::dictator(0), u, swap);
  CHECK_FALSE(dict.holds);
  CHECK(dict.trials == 1);
  REQUIRE(dict.witness.has_value());
  // phi(u) = {s2}, phi(swapped) = {s1}: first symmetric-difference element is s1
  CHECK(dict.witness->violating_alternative == 0);
  REQUIRE(dict.witness->permutation.has_value());
  CHECK((*dict.witness->permutation)(0) == 1);
}

TEST_CASE("anonymity sweeps all permutations for small n") {
  auto verdict = check_anonymity(SolutionConcept::rawls(), grid22(2, 0, 1, 1));
  CHECK(verdict.holds);
  CHECK(verdict.trials == 2);  // 2! permutations
  CHECK(verdict.note == "all permutations checked");

  UtilityProfile three({{Rational(1), Rational(0)},
                        {Rational(0), Rational(1)},
                        {Rational(1), Rational(1)}});
  auto verdict3 = check_anonymity(SolutionConcept::bentham(), three);
  CHECK(verdict3.holds);
  CHECK(verdict3.trials == 6);  // 3! permutations
}

TEST_CASE("anonymity rejects mismatched permutation size") {
  CHECK_THROWS_AS(check_anonymity(SolutionConcept::bentham(), grid22(0, 0, 0, 0),
                                  Permutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("unanimity: vacuous, satisfied, violated") {
  auto vac = check_unanimity(SolutionConcept::rawls(), grid22(0, 1, 1, 0));
  CHECK(vac.holds);
  CHECK(vac.trials == 0);
  CHECK(vac.note == "vacuous: no unanimously best alternative");

  auto ok = check_unanimity(SolutionConcept::bentham(), grid22(0, 0, 0, 1));
  CHECK(ok.holds);
  CHECK(ok.trials == 1);

  // the tie profile: M = {s2} but rawls keeps {s1, s2}
  auto bad = check_unanimity(SolutionConcept::rawls(), grid22(0, 0, 0, 1));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->violating_alternative == 0);
  REQUIRE(bad.witness->facts.size() == 3);
  CHECK(bad.witness->facts[0].set_expr == "M(u)");
  CHECK(bad.witness->facts[0].alternative == 1);
  CHECK(bad.witness->facts[0].member);
  CHECK_FALSE(bad.witness->facts[2].member);

  // same profile trips dictator 0 and sub-rawls too
  CHECK_FALSE(check_unanimity(SolutionConcept::dictator(0), grid22(0, 0, 0, 1)).holds);
  CHECK_FALSE(check_unanimity(SolutionConcept::sub_rawls(), grid22(0, 0, 0, 1)).holds);
  // ...but not bentham or sub-bentham
  CHECK(check_unanimity(SolutionConcept::bentham(), grid22(0, 0, 0, 1)).holds);
  CHECK(check_unanimity(SolutionConcept::sub_bentham(), grid22(0, 0, 0, 1)).holds);
}

TEST_CASE("continuity on the flat-base family") {
  SearchConfig cfg;
  PerturbationFamily fam{grid22(0, 0, 0, 0), 1, cfg.epsilon_ladder};

  // members select {s2} under rawls; base rawls = {s1, s2} contains s2: pass
  auto rawls_ok = check_continuity(SolutionConcept::rawls(), fam);
  CHECK(rawls_ok.holds);
  CHECK(rawls_ok.trials == 5);  // 4 members + base
  CHECK(rawls_ok.note == "family does not refute continuity");

  // sub-rawls picks s1 at the base but s2 along the whole tail: refuted
  auto sub = check_continuity(SolutionConcept::sub_rawls(), fam);
  CHECK_FALSE(sub.holds);
  CHECK(sub.trials == 5);
  REQUIRE(sub.witness.has_value());
  CHECK(sub.witness->violating_alternative == 1);
  CHECK(sub.witness->tail_from == 0);
  REQUIRE(sub.witness->family.has_value());
  CHECK(sub.witness->family->target == 1);
  CHECK(sub.witness->facts.back().set_expr == "phi(base)");
  CHECK_FALSE(sub.witness->facts.back().member);

  // sub-bentham fails on the same family
  CHECK_FALSE(check_continuity(SolutionConcept::sub_bentham(), fam).holds);
  // bentham keeps the whole tie at the base: fine
  CHECK(check_continuity(SolutionConcept::bentham(), fam).holds);

  auto tail = check_continuity(SolutionConcept::sub_rawls(), fam, 2);
  CHECK_FALSE(tail.holds);
  CHECK(tail.trials == 3);  // members 2,3 + base
  CHECK(tail.witness->tail_from == 2);

  CHECK_THROWS_AS(check_continuity(SolutionConcept::rawls(), fam, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_continuity(SolutionConcept::rawls(), fam, -1), std::invalid_argument);
}

TEST_CASE("objective expected consistency") {
  // bentham is linear in the mixture: always consistent
  auto ok = check_oec(SolutionConcept::bentham(), grid22(2, 0, 0, 1), grid22(0, 0, 2, 1),
                      MixtureWeight(Rational(1, 2)));
  CHECK(ok.holds);
  CHECK(ok.trials == 1);

  // the rawls counterexample at p = 1/2
  UtilityProfile u = grid22(2, 0, 0, 0);
  UtilityProfile v = grid22(0, 0, 2, 0);
  auto bad = check_oec(SolutionConcept::rawls(), u, v, MixtureWeight(Rational(1, 2)));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->violating_alternative == 1);  // s2 in both rawls sets, dropped by the mix
  CHECK(bad.witness->profiles.size() == 2);
  REQUIRE(bad.witness->weight.has_value());
  CHECK(bad.witness->weight->p == Rational(1, 2));
  CHECK(bad.witness->facts[2].set_expr == "phi(mix(u, v; p=1/2))");

  // vacuous when the premise sets are disjoint
  auto vac = check_oec(SolutionConcept::bentham(), grid22(2, 0, 2, 0), grid22(0, 2, 0, 2),
                       MixtureWeight(Rational(1, 2)));
  CHECK(vac.holds);
  CHECK(vac.trials == 0);
  CHECK(vac.note == "vacuous: phi(u) and phi(v) share no alternative");
}

TEST_CASE("subjective expected consistency and its uniform reduction") {
  UtilityProfile u({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  UtilityProfile v = permute(u, Permutation::transposition(2, 0, 1));
  BeliefMatrix opposed({Rational(9, 10), Rational(1, 10)});

  auto bad = check_sec(SolutionConcept::bentham(), u, v, opposed);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->violating_alternative == 1);  // common = {s1, s2}, E1 keeps only s1
  REQUIRE(bad.witness->beliefs.has_value());
  CHECK(bad.witness->beliefs->weight(0) == Rational(9, 10));

  // with uniform beliefs SEC is exactly OEC
  for (const auto& concept_id :
       {SolutionConcept::bentham(), SolutionConcept::rawls(), SolutionConcept::dictator(0)}) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      auto sec = check_sec(concept_id, grid22(2, 0, 0, 0), grid22(0, 0, 2, 0),
                           BeliefMatrix::uniform(2, p));
      auto oec = check_oec(concept_id, grid22(2, 0, 0, 0), grid22(0, 0, 2, 0), MixtureWeight(p));
      CHECK(sec.holds == oec.holds);
      if (!sec.holds) {
        CHECK(sec.witness->violating_alternative == oec.witness->violating_alternative);
      }
    }
  }
}

TEST_CASE("minimum consistency") {
  // rawls commutes with pointwise minima here: holds
  auto ok = check_mc(SolutionConcept::rawls(), grid22(2, 0, 0, 0), grid22(0, 0, 2, 0));
  CHECK(ok.holds);

  // bentham does not: s1 best in both, worst after the meet
  UtilityProfile u = grid22(2, 0, 0, 1);
  UtilityProfile v = grid22(0, 0, 2, 1);
  auto bad = check_mc(SolutionConcept::bentham(), u, v);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->violating_alternative == 0);
  CHECK(bad.witness->facts[2].set_expr == "phi(meet(u, v))");
  CHECK_FALSE(bad.witness->weight.has_value());
  CHECK_FALSE(bad.witness->beliefs.has_value());
}

TEST_CASE("consistency checks reject incompatible shapes") {
  UtilityProfile u = grid22(0, 0, 0, 0);
  UtilityProfile w({{Rational(0)}, {Rational(0)}});
  CHECK_THROWS_AS(check_mc(SolutionConcept::bentham(), u, w), std::invalid_argument);
  CHECK_THROWS_AS(check_sec(SolutionConcept::bentham(), u, u, BeliefMatrix({Rational(1, 2)})),
                  std::invalid_argument);
}

TEST_CASE("search finds the unanimity defect of rawls at trial 11") {
  auto result = search_counterexample(SolutionConcept::rawls(), Axiom::Unanimity);
  REQUIRE(result.witness.has_value());
  CHECK(result.trials == 11);
  CHECK(result.witness->profiles.size() == 1);
  CHECK(result.witness->profiles[0] == grid22(0, 0, 0, 1));
  CHECK(result.witness->violating_alternative == 0);

  // the replayed checker reproduces the refutation
  auto replayed = replay(SolutionConcept::rawls(), *result.witness);
  CHECK_FALSE(replayed.holds);
  CHECK(replayed.witness->violating_alternative == 0);
}

TEST_CASE("search finds the empty unanimous set at trial 22") {
  auto result = search_counterexample(SolutionConcept::unanimous(), Axiom::Nonemptiness);
  REQUIRE(result.witness.has_value());
  CHECK(result.trials == 22);
  CHECK(result.witness->profiles[0] == grid22(0, 1, 1, 0));
  CHECK_FALSE(replay(SolutionConcept::unanimous(), *result.witness).holds);
}

TEST_CASE("search finds the dictator anonymity failure at trial 11") {
  auto result = search_counterexample(SolutionConcept::dictator(0), Axiom::Anonymity);
  REQUIRE(result.witness.has_value());
  CHECK(result.trials == 11);
  CHECK(result.witness->profiles[0] == grid22(0, 0, 0, 1));
  REQUIRE(result.witness->permutation.has_value());
  CHECK_FALSE(replay(SolutionConcept::dictator(0), *result.witness).holds);
}

TEST_CASE("search finds the sub-rawls continuity failure at trial 11") {
  auto result = search_counterexample(SolutionConcept::sub_rawls(), Axiom::Continuity);
  REQUIRE(result.witness.has_value());
  CHECK(result.trials == 11);
  REQUIRE(result.witness->family.has_value());
  CHECK(result.witness->family->base == grid22(0, 0, 0, 0));
  CHECK(result.witness->family->target == 1);
  CHECK_FALSE(replay(SolutionConcept::sub_rawls(), *result.witness).holds);
}

TEST_CASE("search certifies bentham unanimity and OEC on the reduced grid") {
  SearchConfig cfg;
  cfg.max_alternatives = 2;
  cfg.random_trials = 100;

  auto unanimity = search_counterexample(SolutionConcept::bentham(), Axiom::Unanimity, cfg);
  CHECK_FALSE(unanimity.witness.has_value());
  CHECK(unanimity.trials == 190);  // 9 + 81 grid profiles + 100 random

  auto oec = search_counterexample(SolutionConcept::bentham(), Axiom::ObjectiveExpectedConsistency,
                                   cfg);
  CHECK_FALSE(oec.witness.has_value());
  CHECK(oec.trials == 20026);  // (81 + 6561 pairs) x 3 weights + 100 random
}

TEST_CASE("search is deterministic") {
  SearchConfig cfg;
  cfg.max_alternatives = 2;
  cfg.random_trials = 200;
  cfg.seed = 42;
  auto first = search_counterexample(SolutionConcept::rawls(), Axiom::MinimumConsistency, cfg);
  auto second = search_counterexample(SolutionConcept::rawls(), Axiom::MinimumConsistency, cfg);
  CHECK(first.trials == second.trials);
  CHECK(first.witness.has_value() == second.witness.has_value());
  if (first.witness) {
    CHECK(first.witness->profiles == second.witness->profiles);
    CHECK(first.witness->violating_alternative == second.witness->violating_alternative);
  }
}

TEST_CASE("search rejects impossible setups") {
  SearchConfig cfg;
  CHECK_THROWS_AS(search_counterexample(SolutionConcept::dictator(5), Axiom::Unanimity, cfg),
                  std::invalid_argument);
  SearchConfig bad;
  bad.grid.clear();
  CHECK_THROWS_AS(search_counterexample(SolutionConcept::bentham(), Axiom::Unanimity, bad),
                  std::invalid_argument);
  SearchConfig bad2;
  bad2.max_agents = 1;
  CHECK_THROWS_AS(search_counterexample(SolutionConcept::bentham(), Axiom::Unanimity, bad2),
                  std::invalid_argument);
  SearchConfig bad3;
  bad3.weight_grid = {Rational(1)};
  CHECK_THROWS_AS(search_counterexample(SolutionConcept::bentham(), Axiom::Unanimity, bad3),
                  std::invalid_argument);
  SearchConfig bad4;
  bad4.epsilon_ladder = {Rational(1, 4), Rational(1, 2)};
  CHECK_THROWS_AS(search_counterexample(SolutionConcept::bentham(), Axiom::Unanimity, bad4),
                  std::invalid_argument);
}

TEST_CASE("replay validates its input") {
  Witness empty;
  empty.axiom = Axiom::Unanimity;
  CHECK_THROWS_AS(replay(SolutionConcept::rawls(), empty), std::out_of_range);

  Witness no_perm;
  no_perm.axiom = Axiom::Anonymity;
  no_perm.profiles = {grid22(0, 0, 0, 1)};
  CHECK_THROWS_AS(replay(SolutionConcept::dictator(0), no_perm), std::invalid_argument);

  Witness no_family;
  no_family.axiom = Axiom::Continuity;
  CHECK_THROWS_AS(replay(SolutionConcept::sub_rawls(), no_family), std::invalid_argument);
}

}  // TEST_SUITE
