#pragma once

#include <optional>
#include <string>
#include <vector>

#include "welfarekit/profile.hpp"

namespace welfarekit {

// Solution sets are sorted vectors of alternative indices.
using SolutionSet = std::vector<int>;

// argmax_s of the column sums: the utilitarian rule.
SolutionSet bentham(const UtilityProfile& u);
// argmax_s of the column minima: the egalitarian rule.
SolutionSet rawls(const UtilityProfile& u);
// Alternatives that every agent weakly prefers to everything else; may be
// empty — this is the partial rule the consistency axioms pivot on.
SolutionSet unanimous(const UtilityProfile& u);
// argmax_s of one agent's row.
SolutionSet dictator(const UtilityProfile& u, int agent);
// argmax of the negated profile = argmin of the column sums.
SolutionSet anti_bentham(const UtilityProfile& u);
// The order-minimal element of rawls(u) / bentham(u), as a singleton set.
SolutionSet sub_rawls(const UtilityProfile& u, const LinearOrder& order);
SolutionSet sub_bentham(const UtilityProfile& u, const LinearOrder& order);

enum class SolutionKind {
  Bentham,
  Rawls,
  Unanimous,
  Dictator,
  AntiBentham,
  SubRawls,
  SubBentham,
};

// A value identifying one concrete solution concept.  Dictator carries the
// privileged agent; the sub-solutions optionally carry a fixed tie-breaking
// order (when absent they use the natural order of whatever profile they are
// evaluated on, which is how the concept family appears in the independence
// table across profiles of different widths).
class SolutionConcept {
 public:
  static SolutionConcept bentham();
  static SolutionConcept rawls();
  static SolutionConcept unanimous();
  static SolutionConcept dictator(int agent);
  static SolutionConcept anti_bentham();
  static SolutionConcept sub_rawls(std::optional<LinearOrder> order = std::nullopt);
  static SolutionConcept sub_bentham(std::optional<LinearOrder> order = std::nullopt);

  SolutionKind kind() const { return kind_; }
  int dictator_agent() const { return agent_; }
  const std::optional<LinearOrder>& order() const { return order_; }

  // "bentham", "dictator:1", "sub-rawls", "sub-bentham:2,0,1", ...
  std::string name() const;
  // Parses the same syntax back; throws std::invalid_argument.
  static SolutionConcept parse(const std::string& text);

  bool operator==(const SolutionConcept&) const = default;

 private:
  SolutionConcept(SolutionKind kind, int agent, std::optional<LinearOrder> order)
      : kind_(kind), agent_(agent), order_(std::move(order)) {}
  SolutionKind kind_;
  int agent_ = 0;
  std::optional<LinearOrder> order_;
};

// Dispatches to the matching rule; validates the dictator index and, for the
// sub-solutions, that the carried order covers exactly u's alternatives.
SolutionSet evaluate(const SolutionConcept& concept_id, const UtilityProfile& u);

// The seven concepts in the row order used by the independence table:
// unanimous, dictator:0, anti-bentham, sub-rawls, sub-bentham, rawls, bentham.
std::vector<SolutionConcept> standard_concepts();

std::string format_solution(const SolutionSet& set, const UtilityProfile& u);

}  // namespace welfarekit
