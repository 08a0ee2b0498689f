#pragma once

#include <string>

#include "json.hpp"
#include "welfarekit/theorems.hpp"

namespace welfarekit {

// Machine-readable reports keep key insertion order so identical runs emit
// byte-identical documents.
using RunReport = nlohmann::ordered_json;

// The on-disk profile format:
//   {
//     "agents": ["jeremy", "john"],          // optional
//     "alternatives": ["lab", "cafe"],       // optional
//     "matrix": [[2, 0], ["1/2", "0.9"]]
//   }
// Matrix entries are JSON integers or strings holding exact rationals
// ("3/4", "0.9").  JSON floats are rejected: they cannot express the intended
// value exactly.
struct ProfileDocument {
  std::vector<std::string> agents;
  std::vector<std::string> alternatives;
  std::vector<std::vector<Rational>> matrix;
};

// Throws std::invalid_argument with row/column context on malformed input.
ProfileDocument parse_profile_document(const std::string& json_text);
UtilityProfile to_profile(const ProfileDocument& document);
UtilityProfile profile_from_json(const std::string& json_text);
// Canonical document for the profile; parsing it back reproduces the profile.
std::string serialize_profile(const UtilityProfile& u);

// Integers that fit in 64 bits stay JSON numbers; everything else becomes a
// canonical "a/b" string.  Exact in both directions.
RunReport rational_to_json(const Rational& value);
RunReport profile_to_json(const UtilityProfile& u);
RunReport solution_to_json(const SolutionSet& set, const UtilityProfile& context);
RunReport config_to_json(const SearchConfig& cfg);
RunReport witness_to_json(const Witness& witness);
RunReport verdict_to_json(const AxiomVerdict& verdict);
RunReport table_to_json(const IndependenceTable& table);
RunReport impossibility_to_json(const ImpossibilityReport& report);
RunReport lemma1_to_json(const Lemma1Report& report);
RunReport trace_to_json(const CharacterizationTrace& trace);

// Human renderings used by the command line tool.
std::string render_profile(const UtilityProfile& u, const std::string& indent = "  ");
std::string render_witness(const Witness& witness, const std::string& indent = "  ");
std::string render_verdict(const AxiomVerdict& verdict);
std::string render_table(const IndependenceTable& table);

}  // namespace welfarekit
