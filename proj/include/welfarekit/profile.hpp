#pragma once

#include <optional>
#include <string>
#include <vector>

#include "welfarekit/rational.hpp"

namespace welfarekit {

// A permutation of agent indices {0..n-1}.  mapping[i] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  // i -> i+1 (mod n), the generator used by the symmetrization arguments.
  static Permutation cyclic(int n);
  static Permutation transposition(int n, int a, int b);
  // All n! permutations in lexicographic order of their mapping.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int i) const { return mapping_[i]; }
  bool is_identity() const;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;  // (next ∘ this)
  const std::vector<int>& mapping() const { return mapping_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> mapping_;
};

// Objective lottery weight p with 0 < p < 1.
struct MixtureWeight {
  Rational p;
  explicit MixtureWeight(Rational value);
};

// Diagonal of a subjective belief matrix: agent i assigns probability
// weights[i] in (0,1) to the first branch and 1-weights[i] to the second.
class BeliefMatrix {
 public:
  explicit BeliefMatrix(std::vector<Rational> weights);
  static BeliefMatrix uniform(int n, Rational p);

  int n_agents() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int agent) const { return weights_[agent]; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

// A strict total order over alternative indices used by the tie-breaking
// sub-solutions.  ranking[k] is the k-th smallest alternative.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<int> ranking);
  static LinearOrder natural(int m);  // s1 < s2 < ... in index order

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  int position(int alternative) const { return position_[alternative]; }
  // The order-minimal member of a nonempty set of alternative indices.
  int min_of(const std::vector<int>& alternatives) const;

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;
};

// An immutable n x m matrix of exact rationals: row i is agent i's utility
// over the shared ordered list of alternatives.  Requires n >= 2 (a society),
// m >= 1.  Two profiles compose (mix/meet/...) only when they agree on both
// dimensions and on the alternative list.
class UtilityProfile {
 public:
  UtilityProfile(int n_agents, int n_alternatives);  // all zeros
  explicit UtilityProfile(std::vector<std::vector<Rational>> rows,
                          std::vector<std::string> agent_names = {},
                          std::vector<std::string> alternative_labels = {});

  int n_agents() const { return n_; }
  int n_alternatives() const { return m_; }
  const Rational& value(int agent, int alternative) const {
    return values_[static_cast<size_t>(agent) * m_ + alternative];
  }

  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& alternative_labels() const { return alternative_labels_; }
  std::string agent_name(int agent) const;              // default "agent1", ...
  std::string alternative_label(int alternative) const;  // default "s1", ...

  bool composable_with(const UtilityProfile& other) const;
  std::vector<std::vector<Rational>> rows() const;

  bool operator==(const UtilityProfile&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Rational> values_;  // row major
  std::vector<std::string> agent_names_;
  std::vector<std::string> alternative_labels_;
};

// u_sigma: agent i receives the row of sigma(i).  Relabels names accordingly.
UtilityProfile permute(const UtilityProfile& u, const Permutation& sigma);

// Objective mixture p*u + (1-p)*v, entrywise.
UtilityProfile mix(const UtilityProfile& u, const UtilityProfile& v, const MixtureWeight& w);

// Subjective mixture: row i is weights[i]*u_i + (1-weights[i])*v_i.
UtilityProfile subjective_mix(const UtilityProfile& u, const UtilityProfile& v,
                              const BeliefMatrix& beliefs);

// Entrywise minimum u ∧ v.
UtilityProfile meet(const UtilityProfile& u, const UtilityProfile& v);

// (1/n) * sum over k of permute(u, cyclic^k): every row becomes the average
// column vector, so the result is agent-constant.
UtilityProfile cyclic_aggregate_sum(const UtilityProfile& u);

// Fold of meets over all cyclic shifts: every row becomes the column-minimum
// vector.
UtilityProfile cyclic_aggregate_min(const UtilityProfile& u);

std::vector<Rational> column_sums(const UtilityProfile& u);
std::vector<Rational> column_minima(const UtilityProfile& u);

UtilityProfile negate(const UtilityProfile& u);
// a*u + b with a > 0, the common positive affine rescale of every entry.
UtilityProfile affine(const UtilityProfile& u, const Rational& a, const Rational& b);

// The sequence u^k that bumps one alternative's column by ever smaller
// epsilons: member(k) adds epsilons[k] to every agent's utility at `target`.
// epsilons must be strictly decreasing and positive.
struct PerturbationFamily {
  UtilityProfile base;
  int target = 0;
  std::vector<Rational> epsilons;

  PerturbationFamily(UtilityProfile base_profile, int target_alternative,
                     std::vector<Rational> eps);
  int size() const { return static_cast<int>(epsilons.size()); }
};

UtilityProfile perturbation_member(const PerturbationFamily& family, int k);

}  // namespace welfarekit
