#include "welfarekit/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace welfarekit {

namespace {

std::string lower(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return text;
}

bool contains(const SolutionSet& set, int a) {
  return std::binary_search(set.begin(), set.end(), a);
}

SolutionSet intersect(const SolutionSet& a, const SolutionSet& b) {
  SolutionSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const SolutionSet& a, const SolutionSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

MembershipFact fact(std::string expr, int alternative, bool member) {
  return MembershipFact{std::move(expr), alternative, member};
}

AxiomVerdict pass_verdict(Axiom axiom, const SolutionConcept& c, long long trials,
                          std::string note = "") {
  return AxiomVerdict{axiom, c, true, trials, std::nullopt, std::move(note)};
}

AxiomVerdict fail_verdict(Axiom axiom, const SolutionConcept& c, long long trials, Witness witness,
                          std::string note = "") {
  return AxiomVerdict{axiom, c, false, trials, std::move(witness), std::move(note)};
}

}  // namespace

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Nonemptiness: return "nonemptiness";
    case Axiom::Anonymity: return "anonymity";
    case Axiom::Unanimity: return "unanimity";
    case Axiom::Continuity: return "continuity";
    case Axiom::SubjectiveExpectedConsistency: return "subjective-expected-consistency";
    case Axiom::ObjectiveExpectedConsistency: return "objective-expected-consistency";
    case Axiom::MinimumConsistency: return "minimum-consistency";
  }
  return "";
}

std::string axiom_short_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Nonemptiness: return "NE";
    case Axiom::Anonymity: return "A";
    case Axiom::Unanimity: return "U";
    case Axiom::Continuity: return "C";
    case Axiom::SubjectiveExpectedConsistency: return "SEC";
    case Axiom::ObjectiveExpectedConsistency: return "OEC";
    case Axiom::MinimumConsistency: return "MC";
  }
  return "";
}

Axiom parse_axiom(const std::string& text) {
  const std::string t = lower(text);
  for (Axiom axiom : {Axiom::Nonemptiness, Axiom::Anonymity, Axiom::Unanimity, Axiom::Continuity,
                      Axiom::SubjectiveExpectedConsistency, Axiom::ObjectiveExpectedConsistency,
                      Axiom::MinimumConsistency}) {
    if (t == axiom_name(axiom) || t == lower(axiom_short_name(axiom))) return axiom;
  }
  throw std::invalid_argument("unknown axiom: " + text);
}

void SearchConfig::validate() const {
  if (grid.empty()) throw std::invalid_argument("search grid must not be empty");
  if (max_agents < 2) throw std::invalid_argument("max_agents must be at least 2");
  if (max_alternatives < 1) throw std::invalid_argument("max_alternatives must be at least 1");
  if (random_trials < 0) throw std::invalid_argument("random_trials must be nonnegative");
  if (weight_grid.empty()) throw std::invalid_argument("weight grid must not be empty");
  for (const Rational& w : weight_grid) {
    if (!(w > 0 && w < 1)) {
      throw std::invalid_argument("weight grid entries must lie strictly between 0 and 1");
    }
  }
  if (epsilon_ladder.empty()) throw std::invalid_argument("epsilon ladder must not be empty");
  for (size_t k = 0; k < epsilon_ladder.size(); ++k) {
    if (!(epsilon_ladder[k] > 0) ||
        (k > 0 && !(epsilon_ladder[k] < epsilon_ladder[k - 1]))) {
      throw std::invalid_argument("epsilon ladder must be positive and strictly decreasing");
    }
  }
}

AxiomVerdict check_nonemptiness(const SolutionConcept& concept_id, const UtilityProfile& u) {
  SolutionSet phi = evaluate(concept_id, u);
  if (!phi.empty()) return pass_verdict(Axiom::Nonemptiness, concept_id, 1);
  Witness witness;
  witness.axiom = Axiom::Nonemptiness;
  witness.profiles = {u};
  for (int s = 0; s < u.n_alternatives(); ++s) witness.facts.push_back(fact("phi(u)", s, false));
  return fail_verdict(Axiom::Nonemptiness, concept_id, 1, std::move(witness),
                      "solution set is empty");
}

namespace {

std::optional<Witness> anonymity_refutation(const SolutionConcept& concept_id,
                                            const UtilityProfile& u, const Permutation& sigma,
                                            const SolutionSet& phi_u) {
  SolutionSet phi_sigma = evaluate(concept_id, permute(u, sigma));
  if (phi_u == phi_sigma) return std::nullopt;
  SolutionSet diff;
  std::set_symmetric_difference(phi_u.begin(), phi_u.end(), phi_sigma.begin(), phi_sigma.end(),
                                std::back_inserter(diff));
  const int a = diff.front();
  Witness witness;
  witness.axiom = Axiom::Anonymity;
  witness.profiles = {u};
  witness.permutation = sigma;
  witness.violating_alternative = a;
  witness.facts.push_back(fact("phi(u)", a, contains(phi_u, a)));
  witness.facts.push_back(fact("phi(permute(u, sigma))", a, contains(phi_sigma, a)));
  return witness;
}

}  // namespace

AxiomVerdict check_anonymity(const SolutionConcept& concept_id, const UtilityProfile& u,
                             const std::optional<Permutation>& sigma, const SearchConfig& cfg,
                             int exhaustive_bound) {
  const SolutionSet phi_u = evaluate(concept_id, u);
  if (sigma) {
    if (sigma->size() != u.n_agents()) {
      throw std::invalid_argument("permutation size must equal the number of agents");
    }
    if (auto witness = anonymity_refutation(concept_id, u, *sigma, phi_u)) {
      return fail_verdict(Axiom::Anonymity, concept_id, 1, std::move(*witness));
    }
    return pass_verdict(Axiom::Anonymity, concept_id, 1);
  }
  const int n = u.n_agents();
  long long trials = 0;
  if (n <= exhaustive_bound) {
    for (const Permutation& perm : Permutation::all(n)) {
      ++trials;
      if (auto witness = anonymity_refutation(concept_id, u, perm, phi_u)) {
        return fail_verdict(Axiom::Anonymity, concept_id, trials, std::move(*witness));
      }
    }
    return pass_verdict(Axiom::Anonymity, concept_id, trials, "all permutations checked");
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<int> mapping(n);
  for (int i = 0; i < n; ++i) mapping[i] = i;
  for (long long t = 0; t < cfg.random_trials; ++t) {
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(mapping[i], mapping[j]);
    }
    ++trials;
    if (auto witness = anonymity_refutation(concept_id, u, Permutation(mapping), phi_u)) {
      return fail_verdict(Axiom::Anonymity, concept_id, trials, std::move(*witness));
    }
  }
  return pass_verdict(Axiom::Anonymity, concept_id, trials, "sampled permutations only");
}

AxiomVerdict check_unanimity(const SolutionConcept& concept_id, const UtilityProfile& u) {
  const SolutionSet top = unanimous(u);
  if (top.empty()) {
    return pass_verdict(Axiom::Unanimity, concept_id, 0,
                        "vacuous: no unanimously best alternative");
  }
  const SolutionSet phi = evaluate(concept_id, u);
  for (int a : phi) {
    if (contains(top, a)) continue;
    Witness witness;
    witness.axiom = Axiom::Unanimity;
    witness.profiles = {u};
    witness.violating_alternative = a;
    witness.facts.push_back(fact("M(u)", top.front(), true));
    witness.facts.push_back(fact("phi(u)", a, true));
    witness.facts.push_back(fact("M(u)", a, false));
    return fail_verdict(Axiom::Unanimity, concept_id, 1, std::move(witness),
                        "selection leaves the unanimous set");
  }
  return pass_verdict(Axiom::Unanimity, concept_id, 1);
}

AxiomVerdict check_continuity(const SolutionConcept& concept_id, const PerturbationFamily& family,
                              int tail_from) {
  if (tail_from < 0 || tail_from >= family.size()) {
    throw std::invalid_argument("tail_from must index a family member");
  }
  const SolutionSet base_set = evaluate(concept_id, family.base);
  std::vector<SolutionSet> member_sets;
  for (int k = tail_from; k < family.size(); ++k) {
    member_sets.push_back(evaluate(concept_id, perturbation_member(family, k)));
  }
  const long long trials = static_cast<long long>(member_sets.size()) + 1;
  for (int a = 0; a < family.base.n_alternatives(); ++a) {
    if (contains(base_set, a)) continue;
    bool in_every_member = true;
    for (const SolutionSet& set : member_sets) {
      if (!contains(set, a)) {
        in_every_member = false;
        break;
      }
    }
    if (!in_every_member) continue;
    Witness witness;
    witness.axiom = Axiom::Continuity;
    witness.family = family;
    witness.tail_from = tail_from;
    witness.violating_alternative = a;
    for (int k = tail_from; k < family.size(); ++k) {
      witness.facts.push_back(fact("phi(member " + std::to_string(k) + ")", a, true));
    }
    witness.facts.push_back(fact("phi(base)", a, false));
    return fail_verdict(Axiom::Continuity, concept_id, trials, std::move(witness),
                        "selected along the whole tail but not at the base profile");
  }
  return pass_verdict(Axiom::Continuity, concept_id, trials, "family does not refute continuity");
}

namespace {

enum class MixKind { Subjective, Objective, Meet };

AxiomVerdict check_consistency(Axiom axiom, MixKind kind, const SolutionConcept& concept_id,
                               const UtilityProfile& u, const UtilityProfile& v,
                               const MixtureWeight* weight, const BeliefMatrix* beliefs) {
  const SolutionSet set_u = evaluate(concept_id, u);
  const SolutionSet set_v = evaluate(concept_id, v);
  const SolutionSet common = intersect(set_u, set_v);
  if (common.empty()) {
    return pass_verdict(axiom, concept_id, 0, "vacuous: phi(u) and phi(v) share no alternative");
  }
  std::string expr;
  std::optional<UtilityProfile> target;
  switch (kind) {
    case MixKind::Subjective: {
      std::ostringstream e;
      e << "phi(subjective_mix(u, v; beliefs=[";
      for (int i = 0; i < beliefs->n_agents(); ++i) {
        if (i) e << ", ";
        e << to_string(beliefs->weight(i));
      }
      e << "]))";
      expr = e.str();
      target = subjective_mix(u, v, *beliefs);
      break;
    }
    case MixKind::Objective:
      expr = "phi(mix(u, v; p=" + to_string(weight->p) + "))";
      target = mix(u, v, *weight);
      break;
    case MixKind::Meet:
      expr = "phi(meet(u, v))";
      target = meet(u, v);
      break;
  }
  const SolutionSet set_target = evaluate(concept_id, *target);
  for (int a : common) {
    if (contains(set_target, a)) continue;
    Witness witness;
    witness.axiom = axiom;
    witness.profiles = {u, v};
    if (weight) witness.weight = *weight;
    if (beliefs) witness.beliefs = *beliefs;
    witness.violating_alternative = a;
    witness.facts.push_back(fact("phi(u)", a, true));
    witness.facts.push_back(fact("phi(v)", a, true));
    witness.facts.push_back(fact(expr, a, false));
    return fail_verdict(axiom, concept_id, 1, std::move(witness),
                        "common selection dropped by the combined profile");
  }
  return pass_verdict(axiom, concept_id, 1);
}

}  // namespace

AxiomVerdict check_sec(const SolutionConcept& concept_id, const UtilityProfile& u,
                       const UtilityProfile& v, const BeliefMatrix& beliefs) {
  return check_consistency(Axiom::SubjectiveExpectedConsistency, MixKind::Subjective, concept_id,
                           u, v, nullptr, &beliefs);
}

AxiomVerdict check_oec(const SolutionConcept& concept_id, const UtilityProfile& u,
                       const UtilityProfile& v, const MixtureWeight& w) {
  return check_consistency(Axiom::ObjectiveExpectedConsistency, MixKind::Objective, concept_id, u,
                           v, &w, nullptr);
}

AxiomVerdict check_mc(const SolutionConcept& concept_id, const UtilityProfile& u,
                      const UtilityProfile& v) {
  return check_consistency(Axiom::MinimumConsistency, MixKind::Meet, concept_id, u, v, nullptr,
                           nullptr);
}

namespace {

// Exhaustive-phase profile enumeration: entries drawn from the grid, cell
// (0,0) most significant, last cell cycling fastest.
std::vector<UtilityProfile> grid_profiles(const SearchConfig& cfg, int n, int m) {
  std::vector<UtilityProfile> out;
  const int cells = n * m;
  const size_t base = cfg.grid.size();
  std::vector<size_t> digits(cells, 0);
  for (;;) {
    std::vector<std::vector<Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
      rows[i].reserve(m);
      for (int s = 0; s < m; ++s) rows[i].push_back(cfg.grid[digits[i * m + s]]);
    }
    out.push_back(UtilityProfile(std::move(rows)));
    int pos = cells - 1;
    while (pos >= 0 && ++digits[pos] == base) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

bool shape_supported(const SolutionConcept& concept_id, int n, int m) {
  if (concept_id.kind() == SolutionKind::Dictator && concept_id.dictator_agent() >= n) {
    return false;
  }
  if ((concept_id.kind() == SolutionKind::SubRawls ||
       concept_id.kind() == SolutionKind::SubBentham) &&
      concept_id.order() && concept_id.order()->size() != m) {
    return false;
  }
  return true;
}

}  // namespace

SearchResult search_counterexample(const SolutionConcept& concept_id, Axiom axiom,
                                   const SearchConfig& cfg) {
  cfg.validate();
  std::vector<std::pair<int, int>> shapes;
  for (int n = 2; n <= cfg.max_agents; ++n) {
    for (int m = 1; m <= cfg.max_alternatives; ++m) {
      if (shape_supported(concept_id, n, m)) shapes.emplace_back(n, m);
    }
  }
  if (shapes.empty()) {
    throw std::invalid_argument(
        "search bounds exclude every profile shape this concept is defined on");
  }

  long long trials = 0;
  std::optional<Witness> found;

  auto note_failure = [&](const AxiomVerdict& verdict) {
    if (!verdict.holds) found = verdict.witness;
    return !verdict.holds;
  };

  // Exhaustive phase.
  for (const auto& [n, m] : shapes) {
    if (found) break;
    const std::vector<UtilityProfile> profiles = grid_profiles(cfg, n, m);
    switch (axiom) {
      case Axiom::Nonemptiness:
        for (const UtilityProfile& u : profiles) {
          ++trials;
          if (note_failure(check_nonemptiness(concept_id, u))) break;
        }
        break;
      case Axiom::Anonymity: {
        std::vector<Permutation> perms;
        for (Permutation& perm : Permutation::all(n)) {
          if (!perm.is_identity()) perms.push_back(std::move(perm));
        }
        for (const UtilityProfile& u : profiles) {
          if (found) break;
          for (const Permutation& perm : perms) {
            ++trials;
            if (note_failure(check_anonymity(concept_id, u, perm, cfg))) break;
          }
        }
        break;
      }
      case Axiom::Unanimity:
        for (const UtilityProfile& u : profiles) {
          ++trials;
          if (note_failure(check_unanimity(concept_id, u))) break;
        }
        break;
      case Axiom::Continuity:
        for (const UtilityProfile& u : profiles) {
          if (found) break;
          for (int target = 0; target < m; ++target) {
            ++trials;
            PerturbationFamily family(u, target, cfg.epsilon_ladder);
            if (note_failure(check_continuity(concept_id, family, 0))) break;
          }
        }
        break;
      case Axiom::SubjectiveExpectedConsistency:
      case Axiom::ObjectiveExpectedConsistency:
      case Axiom::MinimumConsistency: {
        // Pair scan over precomputed solution sets; the public checker is
        // re-invoked on every candidate refutation so the returned witness is
        // exactly what the checker derives.
        std::vector<SolutionSet> sets;
        sets.reserve(profiles.size());
        for (const UtilityProfile& u : profiles) sets.push_back(evaluate(concept_id, u));
        std::vector<std::vector<Rational>> belief_vectors;
        if (axiom == Axiom::SubjectiveExpectedConsistency) {
          std::vector<size_t> digits(n, 0);
          for (;;) {
            std::vector<Rational> weights;
            weights.reserve(n);
            for (int i = 0; i < n; ++i) weights.push_back(cfg.weight_grid[digits[i]]);
            belief_vectors.push_back(std::move(weights));
            int pos = n - 1;
            while (pos >= 0 && ++digits[pos] == cfg.weight_grid.size()) {
              digits[pos] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
        }
        const long long vacuous_batch =
            axiom == Axiom::ObjectiveExpectedConsistency
                ? static_cast<long long>(cfg.weight_grid.size())
                : (axiom == Axiom::SubjectiveExpectedConsistency
                       ? static_cast<long long>(belief_vectors.size())
                       : 1);
        for (size_t iu = 0; iu < profiles.size() && !found; ++iu) {
          for (size_t iv = 0; iv < profiles.size() && !found; ++iv) {
            const SolutionSet common = intersect(sets[iu], sets[iv]);
            if (common.empty()) {
              trials += vacuous_batch;
              continue;
            }
            if (axiom == Axiom::MinimumConsistency) {
              ++trials;
              if (!subset(common, evaluate(concept_id, meet(profiles[iu], profiles[iv])))) {
                note_failure(check_mc(concept_id, profiles[iu], profiles[iv]));
              }
            } else if (axiom == Axiom::ObjectiveExpectedConsistency) {
              for (const Rational& w : cfg.weight_grid) {
                ++trials;
                const MixtureWeight weight(w);
                if (!subset(common,
                            evaluate(concept_id, mix(profiles[iu], profiles[iv], weight)))) {
                  note_failure(check_oec(concept_id, profiles[iu], profiles[iv], weight));
                  break;
                }
              }
            } else {
              for (const std::vector<Rational>& weights : belief_vectors) {
                ++trials;
                const BeliefMatrix beliefs(weights);
                if (!subset(common, evaluate(concept_id,
                                             subjective_mix(profiles[iu], profiles[iv], beliefs)))) {
                  note_failure(check_sec(concept_id, profiles[iu], profiles[iv], beliefs));
                  break;
                }
              }
            }
          }
        }
        break;
      }
    }
  }

  if (found) return SearchResult{std::move(found), trials};

  // Random phase: deterministic generator, documented draw order.
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](size_t k) { return static_cast<size_t>(rng() % static_cast<std::uint64_t>(k)); };
  auto random_profile = [&](int n, int m) {
    std::vector<std::vector<Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
      rows[i].reserve(m);
      for (int s = 0; s < m; ++s) rows[i].push_back(cfg.grid[draw(cfg.grid.size())]);
    }
    return UtilityProfile(std::move(rows));
  };
  for (long long t = 0; t < cfg.random_trials && !found; ++t) {
    const auto [n, m] = shapes[draw(shapes.size())];
    const UtilityProfile u = random_profile(n, m);
    ++trials;
    switch (axiom) {
      case Axiom::Nonemptiness:
        note_failure(check_nonemptiness(concept_id, u));
        break;
      case Axiom::Anonymity: {
        std::vector<int> mapping(n);
        for (int i = 0; i < n; ++i) mapping[i] = i;
        for (int i = n - 1; i > 0; --i) {
          int j = static_cast<int>(draw(static_cast<size_t>(i) + 1));
          std::swap(mapping[i], mapping[j]);
        }
        note_failure(check_anonymity(concept_id, u, Permutation(std::move(mapping)), cfg));
        break;
      }
      case Axiom::Unanimity:
        note_failure(check_unanimity(concept_id, u));
        break;
      case Axiom::Continuity: {
        const int target = static_cast<int>(draw(static_cast<size_t>(m)));
        note_failure(
            check_continuity(concept_id, PerturbationFamily(u, target, cfg.epsilon_ladder), 0));
        break;
      }
      case Axiom::ObjectiveExpectedConsistency: {
        const UtilityProfile v = random_profile(n, m);
        const MixtureWeight w(cfg.weight_grid[draw(cfg.weight_grid.size())]);
        note_failure(check_oec(concept_id, u, v, w));
        break;
      }
      case Axiom::MinimumConsistency: {
        const UtilityProfile v = random_profile(n, m);
        note_failure(check_mc(concept_id, u, v));
        break;
      }
      case Axiom::SubjectiveExpectedConsistency: {
        const UtilityProfile v = random_profile(n, m);
        std::vector<Rational> weights;
        weights.reserve(n);
        for (int i = 0; i < n; ++i) weights.push_back(cfg.weight_grid[draw(cfg.weight_grid.size())]);
        note_failure(check_sec(concept_id, u, v, BeliefMatrix(std::move(weights))));
        break;
      }
    }
  }

  return SearchResult{std::move(found), trials};
}

AxiomVerdict replay(const SolutionConcept& concept_id, const Witness& witness) {
  switch (witness.axiom) {
    case Axiom::Nonemptiness:
      return check_nonemptiness(concept_id, witness.profiles.at(0));
    case Axiom::Anonymity:
      if (!witness.permutation) throw std::invalid_argument("anonymity witness needs a permutation");
      return check_anonymity(concept_id, witness.profiles.at(0), witness.permutation);
    case Axiom::Unanimity:
      return check_unanimity(concept_id, witness.profiles.at(0));
    case Axiom::Continuity:
      if (!witness.family) throw std::invalid_argument("continuity witness needs a family");
      return check_continuity(concept_id, *witness.family, witness.tail_from);
    case Axiom::SubjectiveExpectedConsistency:
      if (!witness.beliefs) throw std::invalid_argument("sec witness needs a belief matrix");
      return check_sec(concept_id, witness.profiles.at(0), witness.profiles.at(1),
                       *witness.beliefs);
    case Axiom::ObjectiveExpectedConsistency:
      if (!witness.weight) throw std::invalid_argument("oec witness needs a mixture weight");
      return check_oec(concept_id, witness.profiles.at(0), witness.profiles.at(1),
                       *witness.weight);
    case Axiom::MinimumConsistency:
      return check_mc(concept_id, witness.profiles.at(0), witness.profiles.at(1));
  }
  throw std::logic_error("unreachable");
}

}  // namespace welfarekit
