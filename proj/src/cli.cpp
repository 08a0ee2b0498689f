#include "welfarekit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "welfarekit/io.hpp"

namespace welfarekit {

namespace {

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
  std::vector<Rational> values;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) values.push_back(parse_rational(piece));
  if (values.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
  return values;
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open profile file: " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_report(const std::string& path, const RunReport& report) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  file << report.dump(2) << "\n";
  if (!file) throw std::invalid_argument("failed writing output file: " + path);
}

// Search bounds shared by the audit and table commands.
struct SearchFlags {
  std::string grid;
  std::string weights;
  SearchConfig cfg;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "Comma separated utility grid (default 0,1,2)");
    cmd->add_option("--max-agents", cfg.max_agents, "Largest society size searched (default 2)");
    cmd->add_option("--max-alternatives", cfg.max_alternatives,
                    "Largest number of alternatives searched (default 3)");
    cmd->add_option("--trials", cfg.random_trials,
                    "Random trials after the exhaustive phase (default 10000)");
    cmd->add_option("--seed", cfg.seed, "Seed for the deterministic random phase (default 0)");
    cmd->add_option("--weights", weights,
                    "Comma separated mixture/belief weight grid (default 1/4,1/2,3/4)");
  }

  SearchConfig materialize() const {
    SearchConfig out = cfg;
    if (!grid.empty()) out.grid = parse_rational_list(grid, "grid");
    if (!weights.empty()) out.weight_grid = parse_rational_list(weights, "weights");
    out.validate();
    return out;
  }
};

std::string describe_config(const SearchConfig& cfg) {
  std::ostringstream out;
  out << "grid={";
  for (size_t i = 0; i < cfg.grid.size(); ++i) {
    if (i) out << ", ";
    out << to_string(cfg.grid[i]);
  }
  out << "}, agents<=" << cfg.max_agents << ", alternatives<=" << cfg.max_alternatives
      << ", weight-grid={";
  for (size_t i = 0; i < cfg.weight_grid.size(); ++i) {
    if (i) out << ", ";
    out << to_string(cfg.weight_grid[i]);
  }
  out << "}, random-trials=" << cfg.random_trials << ", seed=" << cfg.seed;
  return out.str();
}

int cmd_solve(const std::string& profile_path, const std::string& concept_name,
              const std::string& output_path, std::ostream& out) {
  const SolutionConcept concept_id = SolutionConcept::parse(concept_name);
  const UtilityProfile profile = profile_from_json(read_input(profile_path));
  const SolutionSet solution = evaluate(concept_id, profile);

  out << "concept: " << concept_id.name() << "\n";
  out << "profile (" << profile.n_agents() << " agents x " << profile.n_alternatives()
      << " alternatives):\n";
  out << render_profile(profile);
  out << "solution: " << format_solution(solution, profile) << "\n";

  if (!output_path.empty()) {
    RunReport report;
    report["command"] = "solve";
    report["concept"] = concept_id.name();
    report["profile"] = profile_to_json(profile);
    report["solution"] = solution_to_json(solution, profile);
    write_report(output_path, report);
  }
  return 0;
}

int cmd_audit(const std::string& concept_name, const std::string& axiom_name_text,
              const SearchFlags& flags, const std::string& output_path, std::ostream& out) {
  const SolutionConcept concept_id = SolutionConcept::parse(concept_name);
  const Axiom axiom = parse_axiom(axiom_name_text);
  const SearchConfig cfg = flags.materialize();

  out << "concept: " << concept_id.name() << "\n";
  out << "axiom: " << axiom_name(axiom) << "\n";
  out << "search: " << describe_config(cfg) << "\n";
  const SearchResult result = search_counterexample(concept_id, axiom, cfg);
  if (result.witness) {
    out << "result: VIOLATED after " << result.trials << " trials\n";
    out << "witness:\n" << render_witness(*result.witness);
  } else {
    out << "result: HOLDS after " << result.trials << " trials (no counterexample found)\n";
  }

  if (!output_path.empty()) {
    RunReport report;
    report["command"] = "audit";
    report["concept"] = concept_id.name();
    report["axiom"] = axiom_name(axiom);
    report["config"] = config_to_json(cfg);
    report["status"] = result.witness ? "violated" : "holds";
    report["trials"] = result.trials;
    if (result.witness) report["witness"] = witness_to_json(*result.witness);
    write_report(output_path, report);
  }
  return result.witness ? 1 : 0;
}

int cmd_table(const SearchFlags& flags, bool expect_reference, const std::string& output_path,
              std::ostream& out) {
  const SearchConfig cfg = flags.materialize();
  out << "search: " << describe_config(cfg) << "\n\n";
  const IndependenceTable table = independence_table(cfg);
  out << render_table(table) << "\n";

  int violated = 0;
  for (size_t row = 0; row < table.cells.size(); ++row) {
    for (size_t col = 0; col < table.cells[row].size(); ++col) {
      const TableCell& cell = table.cells[row][col];
      if (cell.status != CellStatus::Violated) continue;
      ++violated;
      out << "violated: " << table.concepts[row].name() << " / " << axiom_name(table.axioms[col])
          << " (witness after " << cell.trials << " trials)\n";
    }
  }
  if (violated) out << "full witnesses are included in the machine report (--output)\n";

  const std::vector<TableMismatch> mismatches = compare_to_reference(table);
  if (expect_reference) {
    if (mismatches.empty()) {
      out << "reference check: table matches the reference pattern\n";
    } else {
      out << "reference check: " << mismatches.size() << " mismatching cells\n";
      for (const TableMismatch& mm : mismatches) {
        out << "  " << table.concepts[mm.row].name() << " / " << axiom_name(table.axioms[mm.column])
            << ": computed " << (mm.computed_holds ? "yes" : "no") << ", reference "
            << (mm.reference_holds ? "yes" : "no") << "\n";
      }
    }
  }

  if (!output_path.empty()) {
    RunReport report;
    report["command"] = "table";
    report["table"] = table_to_json(table);
    RunReport reference;
    reference["matches"] = mismatches.empty();
    RunReport mm_json = RunReport::array();
    for (const TableMismatch& mm : mismatches) {
      RunReport entry;
      entry["concept"] = table.concepts[mm.row].name();
      entry["axiom"] = axiom_name(table.axioms[mm.column]);
      entry["computed"] = mm.computed_holds ? "holds" : "violated";
      entry["reference"] = mm.reference_holds ? "holds" : "violated";
      mm_json.push_back(std::move(entry));
    }
    reference["mismatches"] = std::move(mm_json);
    report["reference_comparison"] = std::move(reference);
    write_report(output_path, report);
  }
  return expect_reference && !mismatches.empty() ? 1 : 0;
}

int cmd_impossibility(const std::string& alpha, const std::string& beta, const std::string& p1,
                      const std::string& p2, const std::string& concept_name,
                      const std::string& output_path, std::ostream& out) {
  const SolutionConcept concept_id = SolutionConcept::parse(concept_name);
  const ImpossibilityScenario scenario(parse_rational(alpha), parse_rational(beta),
                                       parse_rational(p1), parse_rational(p2));
  const ImpossibilityReport report = impossibility_demo(scenario, concept_id);

  out << "scenario: alpha=" << to_string(scenario.alpha) << ", beta=" << to_string(scenario.beta)
      << ", p1=" << to_string(scenario.p1) << ", p2=" << to_string(scenario.p2) << "\n";
  out << "concept: " << concept_id.name() << "\n";
  out << "profile u:\n" << render_profile(report.u);
  out << "profile v (agents swapped):\n" << render_profile(report.v);
  out << "phi(u) = " << format_solution(report.phi_u, report.u)
      << ", phi(v) = " << format_solution(report.phi_v, report.v)
      << ", common = " << format_solution(report.common, report.u) << "\n";
  out << "expectation profile E1 = subjective_mix(u, v):\n" << render_profile(report.expectation1);
  out << "expectation profile E2 = subjective_mix(v, u):\n" << render_profile(report.expectation2);
  out << "M(E1) = " << format_solution(report.unanimous1, report.expectation1)
      << ", M(E2) = " << format_solution(report.unanimous2, report.expectation2) << "\n";
  out << "steps:\n";
  auto step = [&](const char* label, const AxiomVerdict& verdict) {
    out << "  " << label << ": " << (verdict.holds ? "holds" : "VIOLATED") << "\n";
    if (!verdict.holds && verdict.witness) out << render_witness(*verdict.witness, "    ");
  };
  step("nonemptiness at u", report.nonemptiness_u);
  step("anonymity under the swap", report.anonymity_swap);
  step("common selection carried into E1 (subjective expectation)", report.sec_forward);
  step("common selection carried into E2 (subjective expectation)", report.sec_reverse);
  step("unanimity at E1", report.unanimity_e1);
  step("unanimity at E2", report.unanimity_e2);
  if (report.contradiction_established) {
    out << "conclusion: contradiction established — the axioms cannot all hold here, and the "
           "steps above show which ones this concept gives up\n";
  } else if (!report.scenario_binding) {
    out << "conclusion: no contradiction — the expectation profiles do not pin opposite "
           "alternatives (scenario not binding)\n";
  } else {
    out << "conclusion: no contradiction on this instance\n";
  }

  if (!output_path.empty()) {
    RunReport json_report;
    json_report["command"] = "impossibility";
    json_report.update(impossibility_to_json(report));
    write_report(output_path, json_report);
  }
  return report.contradiction_established ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"welfarekit — exact solution concepts and axiom audits for utility profiles"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Evaluate a solution concept on a profile file");
  std::string solve_profile;
  std::string solve_concept = "bentham";
  std::string solve_output;
  solve->add_option("profile", solve_profile, "Profile JSON file ('-' reads stdin)")->required();
  solve->add_option("--concept", solve_concept,
                    "bentham | rawls | unanimous | dictator:<i> | anti-bentham | "
                    "sub-rawls[:order] | sub-bentham[:order]");
  solve->add_option("--output", solve_output, "Write a machine-readable report to this file");

  // audit
  auto* audit = app.add_subcommand("audit", "Search for an axiom counterexample");
  std::string audit_concept;
  std::string audit_axiom;
  std::string audit_output;
  SearchFlags audit_flags;
  audit->add_option("--concept", audit_concept, "Solution concept to audit")->required();
  audit
      ->add_option("--axiom", audit_axiom,
                   "nonemptiness | anonymity | unanimity | continuity | sec | oec | mc")
      ->required();
  audit_flags.attach(audit);
  audit->add_option("--output", audit_output, "Write a machine-readable report to this file");

  // table
  auto* table = app.add_subcommand("table", "Compute the 7x6 axiom independence table");
  SearchFlags table_flags;
  bool expect_reference = false;
  std::string table_output;
  table_flags.attach(table);
  table->add_flag("--expect-paper", expect_reference,
                  "Compare against the built-in reference pattern; exit 1 on mismatch");
  table->add_option("--output", table_output, "Write a machine-readable report to this file");

  // impossibility
  auto* impossibility =
      app.add_subcommand("impossibility", "Replay the two-agent impossibility scenario");
  std::string alpha = "1";
  std::string beta = "0";
  std::string p1 = "9/10";
  std::string p2 = "1/10";
  std::string imp_concept = "bentham";
  std::string imp_output;
  impossibility->add_option("--alpha", alpha, "High payoff (default 1)");
  impossibility->add_option("--beta", beta, "Low payoff (default 0)");
  impossibility->add_option("--p1", p1, "Agent 1's belief in the first branch, in (1/2, 1)");
  impossibility->add_option("--p2", p2, "Agent 2's belief in the first branch, in (0, 1/2)");
  impossibility->add_option("--concept", imp_concept, "Concept to trace (default bentham)");
  impossibility->add_option("--output", imp_output,
                            "Write a machine-readable report to this file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("welfarekit");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(solve_profile, solve_concept, solve_output, out);
    if (*audit) return cmd_audit(audit_concept, audit_axiom, audit_flags, audit_output, out);
    if (*table) return cmd_table(table_flags, expect_reference, table_output, out);
    if (*impossibility) {
      return cmd_impossibility(alpha, beta, p1, p2, imp_concept, imp_output, out);
    }
    err << "error: no command selected\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace welfarekit
