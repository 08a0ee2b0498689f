#include "welfarekit/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace welfarekit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_document(const std::string& message) {
  throw std::invalid_argument("profile document: " + message);
}

Rational entry_to_rational(const json& cell, int row, int col) {
  const std::string where =
      "matrix row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
  if (cell.is_number_integer()) {
    if (cell.is_number_unsigned()) {
      const auto raw = cell.get<std::uint64_t>();
      return Rational(mpz_class(std::to_string(raw), 10));
    }
    return Rational(mpz_class(std::to_string(cell.get<std::int64_t>()), 10));
  }
  if (cell.is_number_float()) {
    bad_document(where + ": floating point entries are not accepted; write the exact value "
                         "as a string such as \"1/3\" or \"0.5\"");
  }
  if (cell.is_string()) {
    try {
      return parse_rational(cell.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad_document(where + ": " + e.what());
    }
  }
  bad_document(where + ": expected an integer or a rational string");
}

std::vector<std::string> string_list(const json& value, const std::string& key) {
  if (!value.is_array()) bad_document("\"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_string()) bad_document("\"" + key + "\" must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string cell_label(CellStatus status) {
  return status == CellStatus::Holds ? "yes" : "no";
}

}  // namespace

ProfileDocument parse_profile_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_document(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_document("top level must be a JSON object");
  if (!doc.contains("matrix")) bad_document("missing \"matrix\"");

  ProfileDocument result;
  if (doc.contains("agents")) result.agents = string_list(doc["agents"], "agents");
  if (doc.contains("alternatives")) {
    result.alternatives = string_list(doc["alternatives"], "alternatives");
  }

  const json& matrix = doc["matrix"];
  if (!matrix.is_array() || matrix.empty()) bad_document("\"matrix\" must be a nonempty array");
  for (size_t i = 0; i < matrix.size(); ++i) {
    const json& row = matrix[i];
    if (!row.is_array() || row.empty()) {
      bad_document("matrix row " + std::to_string(i + 1) + " must be a nonempty array");
    }
    std::vector<Rational> values;
    values.reserve(row.size());
    for (size_t s = 0; s < row.size(); ++s) {
      values.push_back(entry_to_rational(row[s], static_cast<int>(i), static_cast<int>(s)));
    }
    result.matrix.push_back(std::move(values));
  }

  const size_t n = result.matrix.size();
  const size_t m = result.matrix.front().size();
  for (size_t i = 1; i < n; ++i) {
    if (result.matrix[i].size() != m) {
      bad_document("matrix row " + std::to_string(i + 1) + " has " +
                   std::to_string(result.matrix[i].size()) + " entries but row 1 has " +
                   std::to_string(m));
    }
  }
  if (!result.agents.empty() && result.agents.size() != n) {
    bad_document("the agents list names " + std::to_string(result.agents.size()) +
                 " agents but the matrix has " + std::to_string(n) + " rows");
  }
  if (!result.alternatives.empty() && result.alternatives.size() != m) {
    bad_document("the alternatives list names " + std::to_string(result.alternatives.size()) +
                 " alternatives but the matrix has " + std::to_string(m) + " columns");
  }
  return result;
}

UtilityProfile to_profile(const ProfileDocument& document) {
  return UtilityProfile(document.matrix, document.agents, document.alternatives);
}

UtilityProfile profile_from_json(const std::string& json_text) {
  return to_profile(parse_profile_document(json_text));
}

RunReport rational_to_json(const Rational& value) {
  if (value.get_den() == 1) {
    const mpz_class& num = value.get_num();
    if (num.fits_slong_p()) return json(num.get_si());
  }
  return json(to_string(value));
}

std::string serialize_profile(const UtilityProfile& u) {
  json doc = json::object();
  if (!u.agent_names().empty()) doc["agents"] = u.agent_names();
  if (!u.alternative_labels().empty()) doc["alternatives"] = u.alternative_labels();
  json matrix = json::array();
  for (int i = 0; i < u.n_agents(); ++i) {
    json row = json::array();
    for (int s = 0; s < u.n_alternatives(); ++s) row.push_back(rational_to_json(u.value(i, s)));
    matrix.push_back(std::move(row));
  }
  doc["matrix"] = std::move(matrix);
  return doc.dump(2) + "\n";
}

RunReport profile_to_json(const UtilityProfile& u) {
  json out = json::object();
  out["n_agents"] = u.n_agents();
  out["n_alternatives"] = u.n_alternatives();
  if (!u.agent_names().empty()) out["agents"] = u.agent_names();
  if (!u.alternative_labels().empty()) out["alternatives"] = u.alternative_labels();
  json matrix = json::array();
  for (int i = 0; i < u.n_agents(); ++i) {
    json row = json::array();
    for (int s = 0; s < u.n_alternatives(); ++s) row.push_back(rational_to_json(u.value(i, s)));
    matrix.push_back(std::move(row));
  }
  out["matrix"] = std::move(matrix);
  return out;
}

RunReport solution_to_json(const SolutionSet& set, const UtilityProfile& context) {
  json out = json::object();
  out["indices"] = set;
  json labels = json::array();
  for (int a : set) labels.push_back(context.alternative_label(a));
  out["labels"] = std::move(labels);
  return out;
}

RunReport config_to_json(const SearchConfig& cfg) {
  json out = json::object();
  json grid = json::array();
  for (const Rational& g : cfg.grid) grid.push_back(rational_to_json(g));
  out["grid"] = std::move(grid);
  out["max_agents"] = cfg.max_agents;
  out["max_alternatives"] = cfg.max_alternatives;
  out["random_trials"] = cfg.random_trials;
  out["seed"] = cfg.seed;
  json weights = json::array();
  for (const Rational& w : cfg.weight_grid) weights.push_back(rational_to_json(w));
  out["weight_grid"] = std::move(weights);
  json ladder = json::array();
  for (const Rational& e : cfg.epsilon_ladder) ladder.push_back(rational_to_json(e));
  out["epsilon_ladder"] = std::move(ladder);
  return out;
}

RunReport witness_to_json(const Witness& witness) {
  json out = json::object();
  out["axiom"] = axiom_name(witness.axiom);
  const UtilityProfile* context = nullptr;
  if (!witness.profiles.empty()) {
    json profiles = json::array();
    for (const UtilityProfile& p : witness.profiles) profiles.push_back(profile_to_json(p));
    out["profiles"] = std::move(profiles);
    context = &witness.profiles.front();
  }
  if (witness.permutation) out["permutation"] = witness.permutation->mapping();
  if (witness.weight) out["weight"] = rational_to_json(witness.weight->p);
  if (witness.beliefs) {
    json beliefs = json::array();
    for (const Rational& b : witness.beliefs->weights()) beliefs.push_back(rational_to_json(b));
    out["beliefs"] = std::move(beliefs);
  }
  if (witness.family) {
    json family = json::object();
    family["base"] = profile_to_json(witness.family->base);
    family["target"] = witness.family->target;
    family["target_label"] = witness.family->base.alternative_label(witness.family->target);
    json eps = json::array();
    for (const Rational& e : witness.family->epsilons) eps.push_back(rational_to_json(e));
    family["epsilons"] = std::move(eps);
    family["tail_from"] = witness.tail_from;
    out["family"] = std::move(family);
    if (!context) context = &witness.family->base;
  }
  if (witness.violating_alternative) {
    out["violating_alternative"] = *witness.violating_alternative;
    if (context) {
      out["violating_label"] = context->alternative_label(*witness.violating_alternative);
    }
  }
  json facts = json::array();
  for (const MembershipFact& f : witness.facts) {
    json fact = json::object();
    fact["set"] = f.set_expr;
    fact["alternative"] = f.alternative;
    if (context) fact["label"] = context->alternative_label(f.alternative);
    fact["member"] = f.member;
    facts.push_back(std::move(fact));
  }
  out["facts"] = std::move(facts);
  return out;
}

RunReport verdict_to_json(const AxiomVerdict& verdict) {
  json out = json::object();
  out["axiom"] = axiom_name(verdict.axiom);
  out["concept"] = verdict.concept_id.name();
  out["status"] = verdict.holds ? "holds" : "violated";
  out["trials"] = verdict.trials;
  if (!verdict.note.empty()) out["note"] = verdict.note;
  if (verdict.witness) out["witness"] = witness_to_json(*verdict.witness);
  return out;
}

RunReport table_to_json(const IndependenceTable& table) {
  json out = json::object();
  out["config"] = config_to_json(table.config);
  json axioms = json::array();
  for (Axiom axiom : table.axioms) axioms.push_back(axiom_name(axiom));
  out["axioms"] = std::move(axioms);
  json rows = json::array();
  for (size_t row = 0; row < table.concepts.size(); ++row) {
    json row_json = json::object();
    row_json["concept"] = table.concepts[row].name();
    json cells = json::object();
    for (size_t col = 0; col < table.axioms.size(); ++col) {
      const TableCell& cell = table.cells[row][col];
      json cell_json = json::object();
      cell_json["status"] = cell.status == CellStatus::Holds ? "holds" : "violated";
      cell_json["trials"] = cell.trials;
      if (cell.witness) cell_json["witness"] = witness_to_json(*cell.witness);
      cells[axiom_name(table.axioms[col])] = std::move(cell_json);
    }
    row_json["cells"] = std::move(cells);
    rows.push_back(std::move(row_json));
  }
  out["rows"] = std::move(rows);
  return out;
}

RunReport impossibility_to_json(const ImpossibilityReport& report) {
  json out = json::object();
  json scenario = json::object();
  scenario["alpha"] = rational_to_json(report.scenario.alpha);
  scenario["beta"] = rational_to_json(report.scenario.beta);
  scenario["p1"] = rational_to_json(report.scenario.p1);
  scenario["p2"] = rational_to_json(report.scenario.p2);
  out["scenario"] = std::move(scenario);
  out["concept"] = report.concept_id.name();
  out["u"] = profile_to_json(report.u);
  out["v"] = profile_to_json(report.v);
  out["expectation1"] = profile_to_json(report.expectation1);
  out["expectation2"] = profile_to_json(report.expectation2);
  out["phi_u"] = solution_to_json(report.phi_u, report.u);
  out["phi_v"] = solution_to_json(report.phi_v, report.v);
  out["common"] = solution_to_json(report.common, report.u);
  out["unanimous_e1"] = solution_to_json(report.unanimous1, report.expectation1);
  out["unanimous_e2"] = solution_to_json(report.unanimous2, report.expectation2);
  json steps = json::object();
  steps["nonemptiness_u"] = verdict_to_json(report.nonemptiness_u);
  steps["anonymity_swap"] = verdict_to_json(report.anonymity_swap);
  steps["sec_forward"] = verdict_to_json(report.sec_forward);
  steps["sec_reverse"] = verdict_to_json(report.sec_reverse);
  steps["unanimity_e1"] = verdict_to_json(report.unanimity_e1);
  steps["unanimity_e2"] = verdict_to_json(report.unanimity_e2);
  out["steps"] = std::move(steps);
  out["scenario_binding"] = report.scenario_binding;
  out["contradiction_established"] = report.contradiction_established;
  return out;
}

RunReport lemma1_to_json(const Lemma1Report& report) {
  json out = json::object();
  out["concept"] = report.concept_id.name();
  out["target"] = report.target;
  json premises = json::array();
  for (const SolutionSet& set : report.premise_sets) premises.push_back(set);
  out["premise_sets"] = std::move(premises);
  out["premise_holds"] = report.premise_holds;
  json steps = json::array();
  for (const Lemma1Step& step : report.steps) {
    json s = json::object();
    s["index"] = step.index;
    s["weight"] = rational_to_json(step.weight.p);
    s["average"] = profile_to_json(step.average);
    s["selected"] = step.selected;
    s["keeps_target"] = step.keeps_target;
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["average"] = profile_to_json(report.average);
  out["final_set"] = report.final_set;
  out["passed"] = report.passed;
  return out;
}

RunReport trace_to_json(const CharacterizationTrace& trace) {
  json out = json::object();
  out["mode"] = trace.mode == AggregateMode::Sum ? "sum" : "min";
  out["input"] = profile_to_json(trace.input);
  out["aggregate"] = profile_to_json(trace.aggregate);
  out["base_solution"] = solution_to_json(trace.base_solution, trace.input);
  out["anonymity_preserved"] = trace.anonymity_preserved;
  out["aggregate_agent_constant"] = trace.aggregate_agent_constant;
  out["aggregate_unanimous"] = solution_to_json(trace.aggregate_unanimous, trace.aggregate);
  out["unanimous_matches"] = trace.unanimous_matches;
  out["passed"] = trace.passed;
  return out;
}

std::string render_profile(const UtilityProfile& u, const std::string& indent) {
  std::ostringstream out;
  for (int i = 0; i < u.n_agents(); ++i) {
    out << indent << u.agent_name(i) << ": [";
    for (int s = 0; s < u.n_alternatives(); ++s) {
      if (s) out << ", ";
      out << to_string(u.value(i, s));
    }
    out << "]\n";
  }
  return out.str();
}

std::string render_witness(const Witness& witness, const std::string& indent) {
  std::ostringstream out;
  const UtilityProfile* context = nullptr;
  const char* profile_names[] = {"u", "v"};
  for (size_t k = 0; k < witness.profiles.size() && k < 2; ++k) {
    out << indent << "profile " << profile_names[k] << ":\n";
    out << render_profile(witness.profiles[k], indent + "  ");
    if (!context) context = &witness.profiles[k];
  }
  if (witness.permutation) {
    out << indent << "permutation: (";
    for (int i = 0; i < witness.permutation->size(); ++i) {
      if (i) out << ' ';
      out << (*witness.permutation)(i);
    }
    out << ")\n";
  }
  if (witness.weight) out << indent << "weight p = " << to_string(witness.weight->p) << "\n";
  if (witness.beliefs) {
    out << indent << "beliefs: [";
    for (int i = 0; i < witness.beliefs->n_agents(); ++i) {
      if (i) out << ", ";
      out << to_string(witness.beliefs->weight(i));
    }
    out << "]\n";
  }
  if (witness.family) {
    out << indent << "perturbation family: base profile\n";
    out << render_profile(witness.family->base, indent + "  ");
    out << indent << "  target: " << witness.family->base.alternative_label(witness.family->target)
        << ", epsilons: [";
    for (size_t k = 0; k < witness.family->epsilons.size(); ++k) {
      if (k) out << ", ";
      out << to_string(witness.family->epsilons[k]);
    }
    out << "], tail from member " << witness.tail_from << "\n";
    if (!context) context = &witness.family->base;
  }
  if (witness.violating_alternative) {
    out << indent << "violating alternative: ";
    if (context) {
      out << context->alternative_label(*witness.violating_alternative);
    } else {
      out << *witness.violating_alternative;
    }
    out << "\n";
  }
  if (!witness.facts.empty()) {
    out << indent << "facts:\n";
    for (const MembershipFact& f : witness.facts) {
      const std::string label =
          context ? context->alternative_label(f.alternative) : std::to_string(f.alternative);
      out << indent << "  " << label << " in " << f.set_expr << ": " << (f.member ? "yes" : "no")
          << "\n";
    }
  }
  return out.str();
}

std::string render_verdict(const AxiomVerdict& verdict) {
  std::ostringstream out;
  out << "axiom " << axiom_name(verdict.axiom) << " for concept " << verdict.concept_id.name()
      << ": " << (verdict.holds ? "HOLDS" : "VIOLATED") << " (trials: " << verdict.trials << ")";
  if (!verdict.note.empty()) out << " — " << verdict.note;
  out << "\n";
  if (verdict.witness) out << "witness:\n" << render_witness(*verdict.witness);
  return out.str();
}

std::string render_table(const IndependenceTable& table) {
  std::vector<std::string> row_names;
  row_names.reserve(table.concepts.size());
  size_t name_width = 0;
  for (const SolutionConcept& c : table.concepts) {
    row_names.push_back(c.name());
    name_width = std::max(name_width, row_names.back().size());
  }
  const size_t cell_width = 5;  // fits "OEC", "yes", "no"
  auto pad = [](const std::string& text, size_t width) {
    return text + std::string(width > text.size() ? width - text.size() : 0, ' ');
  };
  std::ostringstream out;
  out << pad("", name_width);
  for (Axiom axiom : table.axioms) out << "  " << pad(axiom_short_name(axiom), cell_width);
  out << "\n";
  for (size_t row = 0; row < table.cells.size(); ++row) {
    out << pad(row_names[row], name_width);
    for (const TableCell& cell : table.cells[row]) {
      out << "  " << pad(cell_label(cell.status), cell_width);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace welfarekit
