#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "welfarekit/cli.hpp"
#include "welfarekit/io.hpp"

namespace py = pybind11;

namespace {

using namespace welfarekit;

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

Rational rational_from_py(py::handle value) {
  if (py::isinstance<py::bool_>(value)) {
    throw py::type_error("booleans are not utility values");
  }
  if (py::isinstance<py::int_>(value)) {
    return parse_rational(py::cast<std::string>(py::str(value)));
  }
  if (py::isinstance<py::str>(value)) {
    return parse_rational(py::cast<std::string>(value));
  }
  if (py::isinstance<py::float_>(value)) {
    throw py::type_error(
        "floats are not exact; pass an int, a string like '3/4' or '0.9', or a "
        "fractions.Fraction");
  }
  if (py::isinstance(value, fraction_type())) {
    const std::string num = py::cast<std::string>(py::str(value.attr("numerator")));
    const std::string den = py::cast<std::string>(py::str(value.attr("denominator")));
    return parse_rational(num + "/" + den);
  }
  throw py::type_error("expected an int, a rational string, or a fractions.Fraction");
}

py::object rational_to_py(const Rational& value) {
  return fraction_type()(to_string(value));
}

std::vector<Rational> rational_list(py::sequence values) {
  std::vector<Rational> out;
  out.reserve(py::len(values));
  for (py::handle item : values) out.push_back(rational_from_py(item));
  return out;
}

UtilityProfile make_profile(py::sequence rows, std::optional<std::vector<std::string>> agents,
                            std::optional<std::vector<std::string>> alternatives) {
  std::vector<std::vector<Rational>> matrix;
  matrix.reserve(py::len(rows));
  for (py::handle row : rows) {
    matrix.push_back(rational_list(py::cast<py::sequence>(row)));
  }
  return UtilityProfile(std::move(matrix), agents.value_or(std::vector<std::string>{}),
                        alternatives.value_or(std::vector<std::string>{}));
}

py::object json_to_py(const RunReport& value) {
  switch (value.type()) {
    case nlohmann::detail::value_t::null: return py::none();
    case nlohmann::detail::value_t::boolean: return py::bool_(value.get<bool>());
    case nlohmann::detail::value_t::number_integer: return py::int_(value.get<std::int64_t>());
    case nlohmann::detail::value_t::number_unsigned: return py::int_(value.get<std::uint64_t>());
    case nlohmann::detail::value_t::number_float: return py::float_(value.get<double>());
    case nlohmann::detail::value_t::string: return py::str(value.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const RunReport& item : value) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (const auto& item : value.items()) {
        out[py::str(item.key())] = json_to_py(item.value());
      }
      return out;
    }
    default: return py::none();
  }
}

SolutionConcept concept_from(const std::string& name) { return SolutionConcept::parse(name); }

LinearOrder order_from(const std::optional<std::vector<int>>& ranking, int m) {
  if (!ranking) return LinearOrder::natural(m);
  return LinearOrder(*ranking);
}

SearchConfig config_from(std::optional<py::sequence> grid, int max_agents, int max_alternatives,
                         long long random_trials, std::uint64_t seed,
                         std::optional<py::sequence> weights) {
  SearchConfig cfg;
  if (grid) cfg.grid = rational_list(*grid);
  cfg.max_agents = max_agents;
  cfg.max_alternatives = max_alternatives;
  cfg.random_trials = random_trials;
  cfg.seed = seed;
  if (weights) cfg.weight_grid = rational_list(*weights);
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_welfarekit, m) {
  m.doc() = "Exact solution concepts, profile algebra, and axiom audits for utility profiles";

  py::class_<UtilityProfile>(m, "Profile")
      .def(py::init(&make_profile), py::arg("rows"), py::arg("agents") = std::nullopt,
           py::arg("alternatives") = std::nullopt,
           "Profile(rows, agents=None, alternatives=None): rows of exact utilities "
           "(int, 'a/b' / decimal strings, or fractions.Fraction)")
      .def_property_readonly("n_agents", &UtilityProfile::n_agents)
      .def_property_readonly("n_alternatives", &UtilityProfile::n_alternatives)
      .def_property_readonly("agents",
                             [](const UtilityProfile& u) {
                               std::vector<std::string> out;
                               for (int i = 0; i < u.n_agents(); ++i) out.push_back(u.agent_name(i));
                               return out;
                             })
      .def_property_readonly("alternatives",
                             [](const UtilityProfile& u) {
                               std::vector<std::string> out;
                               for (int s = 0; s < u.n_alternatives(); ++s) {
                                 out.push_back(u.alternative_label(s));
                               }
                               return out;
                             })
      .def("value",
           [](const UtilityProfile& u, int agent, int alternative) {
             if (agent < 0 || agent >= u.n_agents() || alternative < 0 ||
                 alternative >= u.n_alternatives()) {
               throw py::index_error("agent or alternative index out of range");
             }
             return rational_to_py(u.value(agent, alternative));
           },
           py::arg("agent"), py::arg("alternative"))
      .def("rows",
           [](const UtilityProfile& u) {
             py::list rows;
             for (int i = 0; i < u.n_agents(); ++i) {
               py::list row;
               for (int s = 0; s < u.n_alternatives(); ++s) {
                 row.append(rational_to_py(u.value(i, s)));
               }
               rows.append(std::move(row));
             }
             return rows;
           })
      .def("__eq__",
           [](const UtilityProfile& a, py::object b) {
             if (!py::isinstance<UtilityProfile>(b)) return false;
             return a == py::cast<const UtilityProfile&>(b);
           })
      .def("__repr__", [](const UtilityProfile& u) {
        std::string out = "Profile([";
        for (int i = 0; i < u.n_agents(); ++i) {
          if (i) out += ", ";
          out += "[";
          for (int s = 0; s < u.n_alternatives(); ++s) {
            if (s) out += ", ";
            out += to_string(u.value(i, s));
          }
          out += "]";
        }
        out += "])";
        return out;
      });

  // Solution concepts.
  m.def("bentham", [](const UtilityProfile& u) { return bentham(u); }, py::arg("profile"));
  m.def("rawls", [](const UtilityProfile& u) { return rawls(u); }, py::arg("profile"));
  m.def("unanimous", [](const UtilityProfile& u) { return unanimous(u); }, py::arg("profile"));
  m.def("anti_bentham", [](const UtilityProfile& u) { return anti_bentham(u); },
        py::arg("profile"));
  m.def("dictator", [](const UtilityProfile& u, int agent) { return dictator(u, agent); },
        py::arg("profile"), py::arg("agent") = 0);
  m.def("sub_rawls",
        [](const UtilityProfile& u, std::optional<std::vector<int>> order) {
          return sub_rawls(u, order_from(order, u.n_alternatives()));
        },
        py::arg("profile"), py::arg("order") = std::nullopt);
  m.def("sub_bentham",
        [](const UtilityProfile& u, std::optional<std::vector<int>> order) {
          return sub_bentham(u, order_from(order, u.n_alternatives()));
        },
        py::arg("profile"), py::arg("order") = std::nullopt);
  m.def("evaluate",
        [](const std::string& concept_name, const UtilityProfile& u) {
          return evaluate(concept_from(concept_name), u);
        },
        py::arg("concept"), py::arg("profile"),
        "Evaluate a concept named like 'bentham', 'dictator:1' or 'sub-rawls:2,0,1'");

  // Profile algebra.
  m.def("permute",
        [](const UtilityProfile& u, const std::vector<int>& mapping) {
          return permute(u, Permutation(mapping));
        },
        py::arg("profile"), py::arg("mapping"));
  m.def("mix",
        [](const UtilityProfile& u, const UtilityProfile& v, py::handle weight) {
          return mix(u, v, MixtureWeight(rational_from_py(weight)));
        },
        py::arg("u"), py::arg("v"), py::arg("weight"));
  m.def("subjective_mix",
        [](const UtilityProfile& u, const UtilityProfile& v, py::sequence beliefs) {
          return subjective_mix(u, v, BeliefMatrix(rational_list(beliefs)));
        },
        py::arg("u"), py::arg("v"), py::arg("beliefs"));
  m.def("meet", [](const UtilityProfile& u, const UtilityProfile& v) { return meet(u, v); },
        py::arg("u"), py::arg("v"));
  m.def("cyclic_aggregate_sum",
        [](const UtilityProfile& u) { return cyclic_aggregate_sum(u); }, py::arg("profile"));
  m.def("cyclic_aggregate_min",
        [](const UtilityProfile& u) { return cyclic_aggregate_min(u); }, py::arg("profile"));
  m.def("column_sums",
        [](const UtilityProfile& u) {
          py::list out;
          for (const Rational& r : column_sums(u)) out.append(rational_to_py(r));
          return out;
        },
        py::arg("profile"));
  m.def("column_minima",
        [](const UtilityProfile& u) {
          py::list out;
          for (const Rational& r : column_minima(u)) out.append(rational_to_py(r));
          return out;
        },
        py::arg("profile"));

  // Serialization.
  m.def("parse_profile", [](const std::string& text) { return profile_from_json(text); },
        py::arg("json_text"));
  m.def("serialize_profile", [](const UtilityProfile& u) { return serialize_profile(u); },
        py::arg("profile"));

  // Axiom checkers: results come back as plain dicts mirroring the CLI's
  // machine-readable reports.
  m.def("check_nonemptiness",
        [](const std::string& concept_name, const UtilityProfile& u) {
          return json_to_py(verdict_to_json(check_nonemptiness(concept_from(concept_name), u)));
        },
        py::arg("concept"), py::arg("profile"));
  m.def("check_anonymity",
        [](const std::string& concept_name, const UtilityProfile& u,
           std::optional<std::vector<int>> sigma) {
          std::optional<Permutation> perm;
          if (sigma) perm = Permutation(*sigma);
          return json_to_py(verdict_to_json(check_anonymity(concept_from(concept_name), u, perm)));
        },
        py::arg("concept"), py::arg("profile"), py::arg("sigma") = std::nullopt);
  m.def("check_unanimity",
        [](const std::string& concept_name, const UtilityProfile& u) {
          return json_to_py(verdict_to_json(check_unanimity(concept_from(concept_name), u)));
        },
        py::arg("concept"), py::arg("profile"));
  m.def("check_continuity",
        [](const std::string& concept_name, const UtilityProfile& base, int target,
           py::sequence epsilons, int tail_from) {
          PerturbationFamily family(base, target, rational_list(epsilons));
          return json_to_py(
              verdict_to_json(check_continuity(concept_from(concept_name), family, tail_from)));
        },
        py::arg("concept"), py::arg("base"), py::arg("target"), py::arg("epsilons"),
        py::arg("tail_from") = 0);
  m.def("check_oec",
        [](const std::string& concept_name, const UtilityProfile& u, const UtilityProfile& v,
           py::handle weight) {
          return json_to_py(verdict_to_json(
              check_oec(concept_from(concept_name), u, v, MixtureWeight(rational_from_py(weight)))));
        },
        py::arg("concept"), py::arg("u"), py::arg("v"), py::arg("weight"));
  m.def("check_mc",
        [](const std::string& concept_name, const UtilityProfile& u, const UtilityProfile& v) {
          return json_to_py(verdict_to_json(check_mc(concept_from(concept_name), u, v)));
        },
        py::arg("concept"), py::arg("u"), py::arg("v"));
  m.def("check_sec",
        [](const std::string& concept_name, const UtilityProfile& u, const UtilityProfile& v,
           py::sequence beliefs) {
          return json_to_py(verdict_to_json(
              check_sec(concept_from(concept_name), u, v, BeliefMatrix(rational_list(beliefs)))));
        },
        py::arg("concept"), py::arg("u"), py::arg("v"), py::arg("beliefs"));

  m.def("search_counterexample",
        [](const std::string& concept_name, const std::string& axiom, std::optional<py::sequence> grid,
           int max_agents, int max_alternatives, long long random_trials, std::uint64_t seed,
           std::optional<py::sequence> weights) {
          const SearchConfig cfg =
              config_from(grid, max_agents, max_alternatives, random_trials, seed, weights);
          const SearchResult result =
              search_counterexample(concept_from(concept_name), parse_axiom(axiom), cfg);
          py::dict out;
          out["status"] = result.witness ? "violated" : "holds";
          out["trials"] = result.trials;
          if (result.witness) out["witness"] = json_to_py(witness_to_json(*result.witness));
          return out;
        },
        py::arg("concept"), py::arg("axiom"), py::arg("grid") = std::nullopt,
        py::arg("max_agents") = 2, py::arg("max_alternatives") = 3,
        py::arg("random_trials") = 10000, py::arg("seed") = 0,
        py::arg("weights") = std::nullopt);

  m.def("independence_table",
        [](std::optional<py::sequence> grid, int max_agents, int max_alternatives,
           long long random_trials, std::uint64_t seed, std::optional<py::sequence> weights) {
          const SearchConfig cfg =
              config_from(grid, max_agents, max_alternatives, random_trials, seed, weights);
          return json_to_py(table_to_json(independence_table(cfg)));
        },
        py::arg("grid") = std::nullopt, py::arg("max_agents") = 2,
        py::arg("max_alternatives") = 3, py::arg("random_trials") = 10000, py::arg("seed") = 0,
        py::arg("weights") = std::nullopt);

  m.def("impossibility",
        [](py::handle alpha, py::handle beta, py::handle p1, py::handle p2,
           const std::string& concept_name) {
          const ImpossibilityScenario scenario(rational_from_py(alpha), rational_from_py(beta),
                                               rational_from_py(p1), rational_from_py(p2));
          return json_to_py(impossibility_to_json(impossibility_demo(scenario,
                                                                     concept_from(concept_name))));
        },
        py::arg("alpha") = 1, py::arg("beta") = 0, py::arg("p1") = "9/10",
        py::arg("p2") = "1/10", py::arg("concept") = "bentham");

  m.def("lemma1",
        [](const std::string& concept_name, const std::vector<UtilityProfile>& profiles, int target) {
          return json_to_py(lemma1_to_json(lemma1_check(concept_from(concept_name), profiles, target)));
        },
        py::arg("concept"), py::arg("profiles"), py::arg("target"));

  m.def("characterization",
        [](const UtilityProfile& u, const std::string& mode) {
          AggregateMode aggregate_mode;
          if (mode == "sum") {
            aggregate_mode = AggregateMode::Sum;
          } else if (mode == "min") {
            aggregate_mode = AggregateMode::Min;
          } else {
            throw py::value_error("mode must be 'sum' or 'min'");
          }
          return json_to_py(trace_to_json(characterization_trace(u, aggregate_mode)));
        },
        py::arg("profile"), py::arg("mode"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          const int code = run_cli(args, out, err);
          py::dict result;
          result["exit_code"] = code;
          result["stdout"] = out.str();
          result["stderr"] = err.str();
          return result;
        },
        py::arg("args"), "Run the command line interface in-process");
}
