#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "welfarekit/cli.hpp"

using namespace welfarekit;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

// A scratch file that cleans up after itself.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& name, const std::string& contents = "") {
    path = std::filesystem::temp_directory_path() / ("welfarekit-test-" + name);
    if (!contents.empty()) {
      std::ofstream file(path);
      file << contents;
    }
  }
  ~TempFile() { std::error_code ignored; std::filesystem::remove(path, ignored); }

  std::string str() const { return path.string(); }
  std::string slurp() const {
    std::ifstream file(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
};

const char* kOfficeProfile = R"({
  "alternatives": ["lab", "cafe"],
  "matrix": [[2, 1], [0, 1]]
})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve evaluates a concept on a profile file") {
  TempFile profile("office.json", kOfficeProfile);

  CliRun bentham = run({"solve", profile.str()});
  CHECK(bentham.code == 0);
  CHECK(bentham.out.find("concept: bentham") != std::string::npos);
  CHECK(bentham.out.find("solution: {lab, cafe}") != std::string::npos);

  CliRun rawls = run({"solve", profile.str(), "--concept", "rawls"});
  CHECK(rawls.code == 0);
  CHECK(rawls.out.find("solution: {cafe}") != std::string::npos);

  CliRun dictator = run({"solve", profile.str(), "--concept", "dictator:1"});
  CHECK(dictator.code == 0);
  CHECK(dictator.out.find("solution: {cafe}") != std::string::npos);
}

TEST_CASE("solve reads stdin when asked") {
  std::istringstream fake_stdin(kOfficeProfile);
  std::streambuf* original = std::cin.rdbuf(fake_stdin.rdbuf());
  CliRun result = run({"solve", "-", "--concept", "rawls"});
  std::cin.rdbuf(original);
  CHECK(result.code == 0);
  CHECK(result.out.find("solution: {cafe}") != std::string::npos);
}

TEST_CASE("solve writes a machine report") {
  TempFile profile("office2.json", kOfficeProfile);
  TempFile report("solve-report.json");

  CliRun result = run({"solve", profile.str(), "--concept", "rawls", "--output", report.str()});
  CHECK(result.code == 0);
  auto doc = nlohmann::json::parse(report.slurp());
  CHECK(doc["command"] == "solve");
  CHECK(doc["concept"] == "rawls");
  CHECK(doc["solution"]["labels"][0] == "cafe");
  CHECK(doc["profile"]["matrix"][0][0] == 2);
}

TEST_CASE("audit reports violations with exit 1") {
  CliRun result = run({"audit", "--concept", "rawls", "--axiom", "unanimity",
                       "--max-alternatives", "2", "--trials", "50"});
  CHECK(result.code == 1);
  CHECK(result.out.find("result: VIOLATED after 11 trials") != std::string::npos);
  CHECK(result.out.find("violating alternative: s1") != std::string::npos);
}

TEST_CASE("audit reports holds with exit 0") {
  TempFile report("audit-report.json");
  CliRun result = run({"audit", "--concept", "bentham", "--axiom", "oec",
                       "--max-alternatives", "2", "--trials", "100",
                       "--output", report.str()});
  CHECK(result.code == 0);
  CHECK(result.out.find("result: HOLDS after 20026 trials") != std::string::npos);
  auto doc = nlohmann::json::parse(report.slurp());
  CHECK(doc["command"] == "audit");
  CHECK(doc["status"] == "holds");
  CHECK(doc["trials"] == 20026);
  CHECK_FALSE(doc.contains("witness"));
}

TEST_CASE("audit accepts custom grids and weights") {
  CliRun result = run({"audit", "--concept", "rawls", "--axiom", "oec", "--grid", "0,1",
                       "--weights", "1/2", "--max-alternatives", "2", "--trials", "0"});
  CHECK(result.code == 1);  // the halving counterexample lives on the {0,1} grid
  CHECK(result.out.find("VIOLATED") != std::string::npos);
}

TEST_CASE("table renders and exits 0 without the reference check") {
  CliRun result = run({"table", "--max-alternatives", "1", "--trials", "5"});
  CHECK(result.code == 0);
  CHECK(result.out.find("bentham") != std::string::npos);
  CHECK(result.out.find("NE") != std::string::npos);
}

TEST_CASE("table with --expect-paper flags mismatches on a crippled search") {
  // with one alternative almost nothing can be refuted, so the computed table
  // cannot match the reference pattern
  TempFile report("table-report.json");
  CliRun result = run({"table", "--max-alternatives", "1", "--trials", "5", "--expect-paper",
                       "--output", report.str()});
  CHECK(result.code == 1);
  CHECK(result.out.find("reference check:") != std::string::npos);
  auto doc = nlohmann::json::parse(report.slurp());
  CHECK(doc["command"] == "table");
  CHECK(doc["reference_comparison"]["matches"] == false);
  CHECK(doc["table"]["rows"].size() == 7);
}

TEST_CASE("impossibility establishes the contradiction by default") {
  TempFile report("imp-report.json");
  CliRun result = run({"impossibility", "--output", report.str()});
  CHECK(result.code == 0);
  CHECK(result.out.find("contradiction established") != std::string::npos);
  CHECK(result.out.find("M(E1) = {s1}, M(E2) = {s2}") != std::string::npos);
  auto doc = nlohmann::json::parse(report.slurp());
  CHECK(doc["command"] == "impossibility");
  CHECK(doc["contradiction_established"] == true);
}

TEST_CASE("impossibility with rawls and custom parameters") {
  CliRun result = run({"impossibility", "--concept", "rawls", "--alpha", "2", "--beta", "1",
                       "--p1", "3/4", "--p2", "1/4"});
  CHECK(result.code == 0);
  CHECK(result.out.find("contradiction established") != std::string::npos);
}

TEST_CASE("impossibility without a binding scenario exits 1") {
  CliRun result = run({"impossibility", "--alpha", "1", "--beta", "1"});
  CHECK(result.code == 1);
  CHECK(result.out.find("scenario not binding") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve"}).code == 2);                                  // missing profile
  CHECK(run({"audit", "--concept", "bentham"}).code == 2);          // missing axiom
  CHECK(run({"solve", "/nonexistent/profile.json"}).code == 2);     // unreadable file
  CHECK(run({"table", "--no-such-flag"}).code == 2);
}

TEST_CASE("domain errors exit 2 with a diagnostic") {
  TempFile profile("office3.json", kOfficeProfile);

  CliRun bad_concept = run({"solve", profile.str(), "--concept", "platonic"});
  CHECK(bad_concept.code == 2);
  CHECK_FALSE(bad_concept.err.empty());

  CliRun bad_axiom = run({"audit", "--concept", "bentham", "--axiom", "beauty"});
  CHECK(bad_axiom.code == 2);

  CliRun bad_scenario = run({"impossibility", "--p1", "1/3"});
  CHECK(bad_scenario.code == 2);
  CHECK_FALSE(bad_scenario.err.empty());

  TempFile bad_json("bad.json", "{not json");
  CliRun parse_error = run({"solve", bad_json.str()});
  CHECK(parse_error.code == 2);

  TempFile floats("floats.json", R"({"matrix": [[0.5, 1], [0, 1]]})");
  CliRun float_error = run({"solve", floats.str()});
  CHECK(float_error.code == 2);
  CHECK(float_error.err.find("1/3") != std::string::npos);  // the guidance survives to stderr

  CliRun bad_weights = run({"audit", "--concept", "bentham", "--axiom", "oec",
                            "--weights", "0,1/2"});
  CHECK(bad_weights.code == 2);
}

TEST_CASE("help requests are not errors") {
  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
  CHECK(help.out.find("impossibility") != std::string::npos);
}

}  // TEST_SUITE
