#include "welfarekit/solutions.hpp"

#include <sstream>
#include <stdexcept>

namespace welfarekit {

namespace {

SolutionSet argmax(const std::vector<Rational>& scores) {
  SolutionSet best;
  for (int s = 0; s < static_cast<int>(scores.size()); ++s) {
    if (best.empty() || scores[s] > scores[best.front()]) {
      best.assign(1, s);
    } else if (scores[s] == scores[best.front()]) {
      best.push_back(s);
    }
  }
  return best;  // ascending by construction
}

LinearOrder resolve_order(const std::optional<LinearOrder>& order, const UtilityProfile& u) {
  if (!order) return LinearOrder::natural(u.n_alternatives());
  if (order->size() != u.n_alternatives()) {
    throw std::invalid_argument("tie-breaking order does not cover the profile's alternatives");
  }
  return *order;
}

}  // namespace

SolutionSet bentham(const UtilityProfile& u) { return argmax(column_sums(u)); }

SolutionSet rawls(const UtilityProfile& u) { return argmax(column_minima(u)); }

SolutionSet unanimous(const UtilityProfile& u) {
  SolutionSet result;
  for (int s = 0; s < u.n_alternatives(); ++s) {
    bool top_for_everyone = true;
    for (int i = 0; i < u.n_agents() && top_for_everyone; ++i) {
      for (int t = 0; t < u.n_alternatives(); ++t) {
        if (u.value(i, t) > u.value(i, s)) {
          top_for_everyone = false;
          break;
        }
      }
    }
    if (top_for_everyone) result.push_back(s);
  }
  return result;
}

SolutionSet dictator(const UtilityProfile& u, int agent) {
  if (agent < 0 || agent >= u.n_agents()) {
    throw std::out_of_range("dictator agent index out of range");
  }
  std::vector<Rational> row(u.n_alternatives());
  for (int s = 0; s < u.n_alternatives(); ++s) row[s] = u.value(agent, s);
  return argmax(row);
}

SolutionSet anti_bentham(const UtilityProfile& u) { return bentham(negate(u)); }

SolutionSet sub_rawls(const UtilityProfile& u, const LinearOrder& order) {
  if (order.size() != u.n_alternatives()) {
    throw std::invalid_argument("tie-breaking order does not cover the profile's alternatives");
  }
  return {order.min_of(rawls(u))};
}

SolutionSet sub_bentham(const UtilityProfile& u, const LinearOrder& order) {
  if (order.size() != u.n_alternatives()) {
    throw std::invalid_argument("tie-breaking order does not cover the profile's alternatives");
  }
  return {order.min_of(bentham(u))};
}

SolutionConcept SolutionConcept::bentham() {
  return SolutionConcept(SolutionKind::Bentham, 0, std::nullopt);
}
SolutionConcept SolutionConcept::rawls() {
  return SolutionConcept(SolutionKind::Rawls, 0, std::nullopt);
}
SolutionConcept SolutionConcept::unanimous() {
  return SolutionConcept(SolutionKind::Unanimous, 0, std::nullopt);
}
SolutionConcept SolutionConcept::dictator(int agent) {
  if (agent < 0) throw std::invalid_argument("dictator agent index must be nonnegative");
  return SolutionConcept(SolutionKind::Dictator, agent, std::nullopt);
}
SolutionConcept SolutionConcept::anti_bentham() {
  return SolutionConcept(SolutionKind::AntiBentham, 0, std::nullopt);
}
SolutionConcept SolutionConcept::sub_rawls(std::optional<LinearOrder> order) {
  return SolutionConcept(SolutionKind::SubRawls, 0, std::move(order));
}
SolutionConcept SolutionConcept::sub_bentham(std::optional<LinearOrder> order) {
  return SolutionConcept(SolutionKind::SubBentham, 0, std::move(order));
}

std::string SolutionConcept::name() const {
  auto order_suffix = [&]() -> std::string {
    if (!order_) return "";
    std::ostringstream out;
    out << ':';
    for (int pos = 0; pos < order_->size(); ++pos) {
      if (pos) out << ',';
      out << order_->ranking()[pos];
    }
    return out.str();
  };
  switch (kind_) {
    case SolutionKind::Bentham: return "bentham";
    case SolutionKind::Rawls: return "rawls";
    case SolutionKind::Unanimous: return "unanimous";
    case SolutionKind::Dictator: return "dictator:" + std::to_string(agent_);
    case SolutionKind::AntiBentham: return "anti-bentham";
    case SolutionKind::SubRawls: return "sub-rawls" + order_suffix();
    case SolutionKind::SubBentham: return "sub-bentham" + order_suffix();
  }
  return "";
}

SolutionConcept SolutionConcept::parse(const std::string& text) {
  std::string head = text;
  std::string arg;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  auto parse_order = [&]() -> std::optional<LinearOrder> {
    if (arg.empty()) return std::nullopt;
    std::vector<int> ranking;
    std::istringstream in(arg);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument("bad order element: " + piece);
      ranking.push_back(value);
    }
    return LinearOrder(std::move(ranking));
  };
  if (head == "bentham") return bentham();
  if (head == "rawls") return rawls();
  if (head == "unanimous") return unanimous();
  if (head == "anti-bentham") return anti_bentham();
  if (head == "sub-rawls") return sub_rawls(parse_order());
  if (head == "sub-bentham") return sub_bentham(parse_order());
  if (head == "dictator") {
    if (arg.empty()) return dictator(0);
    size_t used = 0;
    int agent = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument("bad dictator agent: " + arg);
    return dictator(agent);
  }
  throw std::invalid_argument("unknown solution concept: " + text);
}

SolutionSet evaluate(const SolutionConcept& concept_id, const UtilityProfile& u) {
  switch (concept_id.kind()) {
    case SolutionKind::Bentham: return bentham(u);
    case SolutionKind::Rawls: return rawls(u);
    case SolutionKind::Unanimous: return unanimous(u);
    case SolutionKind::Dictator: return dictator(u, concept_id.dictator_agent());
    case SolutionKind::AntiBentham: return anti_bentham(u);
    case SolutionKind::SubRawls:
      return sub_rawls(u, resolve_order(concept_id.order(), u));
    case SolutionKind::SubBentham:
      return sub_bentham(u, resolve_order(concept_id.order(), u));
  }
  throw std::logic_error("unreachable");
}

std::vector<SolutionConcept> standard_concepts() {
  return {
      SolutionConcept::unanimous(),   SolutionConcept::dictator(0),
      SolutionConcept::anti_bentham(), SolutionConcept::sub_rawls(),
      SolutionConcept::sub_bentham(),  SolutionConcept::rawls(),
      SolutionConcept::bentham(),
  };
}

std::string format_solution(const SolutionSet& set, const UtilityProfile& u) {
  std::ostringstream out;
  out << '{';
  for (size_t k = 0; k < set.size(); ++k) {
    if (k) out << ", ";
    out << u.alternative_label(set[k]);
  }
  out << '}';
  return out.str();
}

}  // namespace welfarekit
