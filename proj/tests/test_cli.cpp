#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "confarea/cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace confarea;
using nlohmann::json;
using testing::pi;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else cell += ch;
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "confarea_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("area: lemniscate rows agree") {
  const auto r = run({"area", "--region", "lemniscate", "--m", "2", "--oracle"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"region", "params", "method", "value", "est_error", "order",
                                            "max_deviation"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][3]) - 2.0) < 1e-6);
}

TEST_CASE("area: circle and ellipse") {
  auto r = run({"area", "--region", "circle", "--r", "1"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][3]) - pi) < 1e-14);

  r = run({"area", "--region", "ellipse", "--r", "2", "--oracle"});
  REQUIRE(r.code == 0);
  rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][3]) - 3.75 * pi) < 1e-12);

  r = run({"area", "--region", "ellipse", "--c", "0.5", "--oracle", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["reports"].size() == 2);
  CHECK(std::abs(j["reports"][0]["value"].get<double>() - pi * std::cosh(0.5) * std::sinh(0.5)) < 1e-14);
}

TEST_CASE("area: cardioid") {
  const auto r = run({"area", "--region", "cardioid"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][3]) - 3 * pi / 8) < 1e-12);
}

TEST_CASE("area: JSON report carries defaults and deviations") {
  const auto r = run({"area", "--region", "lemniscate", "--m", "3", "--oracle", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "area");
  CHECK(j["defaults"]["trunc"] == 200);
  CHECK(j["defaults"]["order"] == 64);
  CHECK(j["reports"].size() == 3);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["value"].is_number_float());
    CHECK(rep["method"].is_string());
    CHECK(rep["order"].is_number_integer());
    CHECK(rep["est_error"].is_number());
    CHECK(rep["warnings"].is_array());
  }
  CHECK(j["deviations"].size() == 3);
  for (const auto& d : j["deviations"]) CHECK(d["abs"].get<double>() < 1e-5);
}

TEST_CASE("area: custom tail file") {
  const auto good = write_file("tail_ok.json", R"({"min_exp":-1,"max_exp":1,"coeffs":[[1,1,0],[-1,1,0]]})");
  auto r = run({"area", "--region", "custom-tail", "--tail", good, "--r", "2", "--oracle"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(std::stod(rows[1][3]) - 3.75 * pi) < 1e-12);

  const auto bad = write_file("tail_bad.json", R"({"min_exp":-1,"max_exp":1,"coeffs":[[1,1]]})");
  r = run({"area", "--region", "custom-tail", "--tail", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("parse error") != std::string::npos);

  const auto junk = write_file("tail_junk.json", "{not json");
  CHECK(run({"area", "--region", "custom-tail", "--tail", junk}).code == 3);
  CHECK(run({"area", "--region", "custom-tail", "--tail", (scratch_dir() / "missing.json").string()}).code == 3);
  CHECK(run({"area", "--region", "custom-tail"}).code == 2);
}

TEST_CASE("negative custom-tail area warns") {
  const auto tail = write_file("tail_neg.json", R"({"min_exp":-2,"max_exp":1,"coeffs":[[1,1,0],[-2,1,0]]})");
  const auto r = run({"area", "--region", "custom-tail", "--tail", tail, "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"area", "--region", "square"}).code == 2);
  CHECK(run({"area", "--region", "circle", "--bogus", "1"}).code == 2);
  CHECK(run({"area", "--region", "circle", "--r", "-1"}).code == 2);
  CHECK(run({"area", "--region", "lemniscate", "--m", "0"}).code == 2);
  CHECK(run({"ortho", "--c", "0"}).code == 2);
  CHECK(run({"ortho", "--c", "0.5", "--nmax", "13"}).code == 2);
  CHECK(run({"interp", "--func", "runge", "--nmax", "4"}).code == 2);
  CHECK(run({"interp", "--func", "sinc"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"area", "--region", "circle", "--format", "xml"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("area") != std::string::npos);
}

TEST_CASE("ortho") {
  const auto summary = (scratch_dir() / "ortho_summary.json").string();
  auto r = run({"ortho", "--c", "0.69314718055994531", "--nmax", "3", "--summary", summary});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  const double rho = 4.0;
  for (int n = 0; n <= 3; ++n) {
    const double want = pi / (4.0 * (n + 1)) * (std::pow(rho, n + 1) - std::pow(rho, -n - 1));
    CHECK(std::abs(std::stod(rows[std::size_t(n + 1)][std::size_t(n + 1)]) - want) < 1e-7 * want);
  }
  std::ifstream in(summary);
  const auto j = json::parse(in);
  CHECK(j["max_offdiag"].get<double>() < 1e-7);
  CHECK(j["diag_rel_errors"].size() == 4);
  CHECK(j["max_imag"].get<double>() < 1e-7);

  r = run({"ortho", "--c", "0.5", "--nmax", "0"});
  REQUIRE(r.code == 0);
  const auto one = csv_rows(r.out);
  REQUIRE(one.size() == 2);
  CHECK(std::abs(std::stod(one[1][1]) - pi * std::cosh(0.5) * std::sinh(0.5)) < 1e-12);
  CHECK(json::parse(r.err).contains("max_offdiag"));

  r = run({"ortho", "--c", "1", "--nmax", "4", "--family", "P", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto p = json::parse(r.out);
  for (const auto& e : p["diag_rel_errors"]) CHECK(e.get<double>() < 1e-7);
  CHECK(p["gram"].size() == 5);
}

TEST_CASE("interp") {
  auto r = run({"interp", "--func", "inv-shift", "--nmax", "24", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rel_dev"].get<double>() <= 0.05);
  CHECK(j["expected_logR"].get<double>() == doctest::Approx(std::log(2.0 + std::sqrt(3.0))));
  CHECK(j["curve"].size() == 21);

  r = run({"interp", "--func", "runge", "--nmax", "40", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rel_dev"].get<double>() <= 0.05);

  r = run({"interp", "--func", "exp", "--nmax", "20"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  CHECK(rows.front() == std::vector<std::string>{"n", "max_error"});
  CHECK(std::stod(rows.back()[1]) <= 1e-13);
  j = json::parse(r.err);
  CHECK(j["rel_dev"].is_null());
  CHECK(j["expected_logR"].is_null());
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "gamma-identities"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  for (const auto& c : j["checks"]) CHECK(c["residual"].get<double>() < 1e-6);

  for (const char* suite : {"parseval", "gronwall", "pointmass"}) CHECK(run({"verify", "--suite", suite}).code == 0);

  const auto good = write_file("verify_tail.json", R"({"min_exp":-2,"max_exp":1,"coeffs":[[1,1,0],[-2,0.3,0.1]]})");
  CHECK(run({"verify", "--suite", "gronwall", "--tail", good}).code == 0);
  const auto bad = write_file("verify_bad.json", R"({"min_exp":0,"max_exp":3,"coeffs":[[3,1,0]]})");
  r = run({"verify", "--suite", "gronwall", "--tail", bad});
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());

  r = run({"verify", "--suite", "cardioid", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(csv_rows(r.out).front() == std::vector<std::string>{"suite", "check", "residual", "tolerance", "pass"});
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"area", "--region", "lemniscate", "--m", "5", "--oracle"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> ortho{"ortho", "--c", "0.7", "--nmax", "5"};
  CHECK(run(ortho).out == run(ortho).out);
}

TEST_CASE("output file and output-directory override") {
  const auto dir = scratch_dir();
  const auto abs_path = (dir / "circle.csv").string();
  auto r = run({"area", "--region", "circle", "--output", abs_path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(abs_path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().rfind("region,", 0) == 0);

  ::setenv("CONFAREA_OUTPUT_DIR", dir.string().c_str(), 1);
  r = run({"ortho", "--c", "0.5", "--nmax", "2", "--output", "gram.csv"});
  ::unsetenv("CONFAREA_OUTPUT_DIR");
  REQUIRE(r.code == 0);
  CHECK(std::filesystem::exists(dir / "gram.csv"));
  CHECK(std::filesystem::exists(dir / "gram.csv.json"));
}
