#include "welfarekit/profile.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace welfarekit {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<std::vector<Rational>> combine(
    const UtilityProfile& u, const UtilityProfile& v,
    const std::function<Rational(const Rational&, const Rational&, int)>& op) {
  require(u.composable_with(v), "profiles are not composable (shape or alternatives differ)");
  std::vector<std::vector<Rational>> rows(u.n_agents());
  for (int i = 0; i < u.n_agents(); ++i) {
    rows[i].reserve(u.n_alternatives());
    for (int s = 0; s < u.n_alternatives(); ++s) {
      rows[i].push_back(op(u.value(i, s), v.value(i, s), i));
    }
  }
  return rows;
}

}  // namespace

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int target : mapping_) {
    require(target >= 0 && target < size() && !seen[target],
            "permutation mapping must be a bijection on 0..n-1");
    seen[target] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> mapping(n);
  for (int i = 0; i < n; ++i) mapping[i] = i;
  return Permutation(std::move(mapping));
}

Permutation Permutation::cyclic(int n) {
  std::vector<int> mapping(n);
  for (int i = 0; i < n; ++i) mapping[i] = (i + 1) % n;
  return Permutation(std::move(mapping));
}

Permutation Permutation::transposition(int n, int a, int b) {
  require(a >= 0 && a < n && b >= 0 && b < n, "transposition indices out of range");
  std::vector<int> mapping(n);
  for (int i = 0; i < n; ++i) mapping[i] = i;
  std::swap(mapping[a], mapping[b]);
  return Permutation(std::move(mapping));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> mapping(n);
  for (int i = 0; i < n; ++i) mapping[i] = i;
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation(mapping));
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> mapping(mapping_.size());
  for (int i = 0; i < size(); ++i) mapping[mapping_[i]] = i;
  return Permutation(std::move(mapping));
}

Permutation Permutation::then(const Permutation& next) const {
  require(size() == next.size(), "permutation sizes differ");
  std::vector<int> mapping(mapping_.size());
  for (int i = 0; i < size(); ++i) mapping[i] = next(mapping_[i]);
  return Permutation(std::move(mapping));
}

MixtureWeight::MixtureWeight(Rational value) : p(std::move(value)) {
  require(p > 0 && p < 1, "mixture weight must lie strictly between 0 and 1");
}

BeliefMatrix::BeliefMatrix(std::vector<Rational> weights) : weights_(std::move(weights)) {
  require(!weights_.empty(), "belief matrix needs at least one agent");
  for (const Rational& w : weights_) {
    require(w > 0 && w < 1, "belief weights must lie strictly between 0 and 1");
  }
}

BeliefMatrix BeliefMatrix::uniform(int n, Rational p) {
  return BeliefMatrix(std::vector<Rational>(n, std::move(p)));
}

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  position_.assign(ranking_.size(), -1);
  for (int pos = 0; pos < size(); ++pos) {
    int alt = ranking_[pos];
    require(alt >= 0 && alt < size() && position_[alt] == -1,
            "order ranking must list each alternative exactly once");
    position_[alt] = pos;
  }
}

LinearOrder LinearOrder::natural(int m) {
  std::vector<int> ranking(m);
  for (int i = 0; i < m; ++i) ranking[i] = i;
  return LinearOrder(std::move(ranking));
}

int LinearOrder::min_of(const std::vector<int>& alternatives) const {
  require(!alternatives.empty(), "cannot take the order-minimum of an empty set");
  int best = alternatives.front();
  for (int alt : alternatives) {
    require(alt >= 0 && alt < size(), "alternative outside the order's domain");
    if (position_[alt] < position_[best]) best = alt;
  }
  return best;
}

UtilityProfile::UtilityProfile(int n_agents, int n_alternatives)
    : n_(n_agents), m_(n_alternatives) {
  require(n_ >= 2, "a profile needs at least two agents");
  require(m_ >= 1, "a profile needs at least one alternative");
  values_.assign(static_cast<size_t>(n_) * m_, Rational(0));
}

UtilityProfile::UtilityProfile(std::vector<std::vector<Rational>> rows,
                               std::vector<std::string> agent_names,
                               std::vector<std::string> alternative_labels)
    : n_(static_cast<int>(rows.size())),
      agent_names_(std::move(agent_names)),
      alternative_labels_(std::move(alternative_labels)) {
  require(n_ >= 2, "a profile needs at least two agents");
  m_ = static_cast<int>(rows.front().size());
  require(m_ >= 1, "a profile needs at least one alternative");
  values_.reserve(static_cast<size_t>(n_) * m_);
  for (auto& row : rows) {
    require(static_cast<int>(row.size()) == m_, "all agent rows must have the same length");
    for (auto& entry : row) values_.push_back(std::move(entry));
  }
  require(agent_names_.empty() || static_cast<int>(agent_names_.size()) == n_,
          "agent name list must match the number of agents");
  require(alternative_labels_.empty() || static_cast<int>(alternative_labels_.size()) == m_,
          "alternative label list must match the number of alternatives");
}

std::string UtilityProfile::agent_name(int agent) const {
  if (!agent_names_.empty()) return agent_names_[agent];
  return "agent" + std::to_string(agent + 1);
}

std::string UtilityProfile::alternative_label(int alternative) const {
  if (!alternative_labels_.empty()) return alternative_labels_[alternative];
  return "s" + std::to_string(alternative + 1);
}

bool UtilityProfile::composable_with(const UtilityProfile& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  if (alternative_labels_.empty() && other.alternative_labels_.empty()) return true;
  for (int s = 0; s < m_; ++s) {
    if (alternative_label(s) != other.alternative_label(s)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> UtilityProfile::rows() const {
  std::vector<std::vector<Rational>> result(n_);
  for (int i = 0; i < n_; ++i) {
    result[i].assign(values_.begin() + static_cast<size_t>(i) * m_,
                     values_.begin() + static_cast<size_t>(i + 1) * m_);
  }
  return result;
}

UtilityProfile permute(const UtilityProfile& u, const Permutation& sigma) {
  require(sigma.size() == u.n_agents(), "permutation size must equal the number of agents");
  std::vector<std::vector<Rational>> rows(u.n_agents());
  std::vector<std::string> names = u.agent_names();
  for (int i = 0; i < u.n_agents(); ++i) {
    rows[i].reserve(u.n_alternatives());
    for (int s = 0; s < u.n_alternatives(); ++s) rows[i].push_back(u.value(sigma(i), s));
    if (!names.empty()) names[i] = u.agent_names()[sigma(i)];
  }
  return UtilityProfile(std::move(rows), std::move(names), u.alternative_labels());
}

UtilityProfile mix(const UtilityProfile& u, const UtilityProfile& v, const MixtureWeight& w) {
  const Rational q = 1 - w.p;
  auto rows = combine(u, v, [&](const Rational& a, const Rational& b, int) {
    return Rational(w.p * a + q * b);
  });
  return UtilityProfile(std::move(rows), u.agent_names(), u.alternative_labels());
}

UtilityProfile subjective_mix(const UtilityProfile& u, const UtilityProfile& v,
                              const BeliefMatrix& beliefs) {
  require(beliefs.n_agents() == u.n_agents(),
          "belief matrix size must equal the number of agents");
  auto rows = combine(u, v, [&](const Rational& a, const Rational& b, int agent) {
    const Rational& p = beliefs.weight(agent);
    return Rational(p * a + (1 - p) * b);
  });
  return UtilityProfile(std::move(rows), u.agent_names(), u.alternative_labels());
}

UtilityProfile meet(const UtilityProfile& u, const UtilityProfile& v) {
  auto rows = combine(u, v, [](const Rational& a, const Rational& b, int) {
    return a <= b ? a : b;
  });
  return UtilityProfile(std::move(rows), u.agent_names(), u.alternative_labels());
}

UtilityProfile cyclic_aggregate_sum(const UtilityProfile& u) {
  const int n = u.n_agents();
  const Permutation step = Permutation::cyclic(n);
  std::vector<std::vector<Rational>> total = u.rows();
  Permutation power = step;
  for (int k = 1; k < n; ++k) {
    UtilityProfile shifted = permute(u, power);
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < u.n_alternatives(); ++s) total[i][s] += shifted.value(i, s);
    }
    power = power.then(step);
  }
  for (auto& row : total) {
    for (auto& entry : row) entry /= n;
  }
  return UtilityProfile(std::move(total), u.agent_names(), u.alternative_labels());
}

UtilityProfile cyclic_aggregate_min(const UtilityProfile& u) {
  const int n = u.n_agents();
  const Permutation step = Permutation::cyclic(n);
  UtilityProfile result = u;
  Permutation power = step;
  for (int k = 1; k < n; ++k) {
    result = meet(result, permute(u, power));
    power = power.then(step);
  }
  return result;
}

std::vector<Rational> column_sums(const UtilityProfile& u) {
  std::vector<Rational> sums(u.n_alternatives(), Rational(0));
  for (int i = 0; i < u.n_agents(); ++i) {
    for (int s = 0; s < u.n_alternatives(); ++s) sums[s] += u.value(i, s);
  }
  return sums;
}

std::vector<Rational> column_minima(const UtilityProfile& u) {
  std::vector<Rational> minima(u.n_alternatives());
  for (int s = 0; s < u.n_alternatives(); ++s) {
    minima[s] = u.value(0, s);
    for (int i = 1; i < u.n_agents(); ++i) {
      if (u.value(i, s) < minima[s]) minima[s] = u.value(i, s);
    }
  }
  return minima;
}

UtilityProfile negate(const UtilityProfile& u) {
  std::vector<std::vector<Rational>> rows = u.rows();
  for (auto& row : rows) {
    for (auto& entry : row) entry = -entry;
  }
  return UtilityProfile(std::move(rows), u.agent_names(), u.alternative_labels());
}

UtilityProfile affine(const UtilityProfile& u, const Rational& a, const Rational& b) {
  require(a > 0, "affine rescale factor must be positive");
  std::vector<std::vector<Rational>> rows = u.rows();
  for (auto& row : rows) {
    for (auto& entry : row) entry = a * entry + b;
  }
  return UtilityProfile(std::move(rows), u.agent_names(), u.alternative_labels());
}

PerturbationFamily::PerturbationFamily(UtilityProfile base_profile, int target_alternative,
                                       std::vector<Rational> eps)
    : base(std::move(base_profile)), target(target_alternative), epsilons(std::move(eps)) {
  require(target >= 0 && target < base.n_alternatives(),
          "perturbation target outside the profile's alternatives");
  require(!epsilons.empty(), "perturbation family needs at least one member");
  for (size_t k = 0; k < epsilons.size(); ++k) {
    require(epsilons[k] > 0, "perturbation epsilons must be positive");
    require(k == 0 || epsilons[k] < epsilons[k - 1],
            "perturbation epsilons must be strictly decreasing");
  }
}

UtilityProfile perturbation_member(const PerturbationFamily& family, int k) {
  require(k >= 0 && k < family.size(), "perturbation member index out of range");
  std::vector<std::vector<Rational>> rows = family.base.rows();
  for (auto& row : rows) row[family.target] += family.epsilons[k];
  return UtilityProfile(std::move(rows), family.base.agent_names(),
                        family.base.alternative_labels());
}

}  // namespace welfarekit
