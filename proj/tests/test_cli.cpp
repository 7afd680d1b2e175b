// End-to-end tests driving the scv binary (path injected via SCV_CLI_PATH).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "scv_cli_tests";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd =
      std::string(SCV_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int rc = std::system(cmd.c_str());
  CliResult res;
  res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "scv_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("run: two-extremes on the three-candidate line") {
  const CliResult r = run_cli("run --instance line3 --mechanism two-extremes --actions 1,2,3");
  CHECK(r.code == 0);
  CHECK(r.out.find("elected pair: (y1, y3)") != std::string::npos);
}

TEST_CASE("run: pair-independent spreads 1/6 over all pairs of multi4") {
  const CliResult r =
      run_cli("run --instance multi4 --mechanism pair-independent --actions 1,2,3,4");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.166666666667") != std::string::npos);
}

TEST_CASE("run: positions only derives truthful actions") {
  const CliResult r =
      run_cli("run --instance line3 --mechanism two-extremes --positions \"-1;0;2\"");
  CHECK(r.code == 0);
  CHECK(r.err.find("derived truthfully") != std::string::npos);
  CHECK(r.out.find("OPT") != std::string::npos);
  CHECK(r.out.find("ratio") != std::string::npos);
}

TEST_CASE("run: inconsistent profile is a config error") {
  const CliResult r = run_cli(
      "run --instance line3 --mechanism two-extremes --actions 3,2,3 --positions \"-2;0;2\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("not consistent") != std::string::npos);
}

TEST_CASE("run: malformed instance JSON is a config error") {
  const fs::path bad = write_file("bad.json", "{ nope");
  const CliResult r = run_cli("run --instance " + bad.string() + " --actions 1");
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed") != std::string::npos);
}

TEST_CASE("run: instance JSON file end-to-end") {
  const fs::path inst = write_file("inst.json", R"({
    "dimension": 1,
    "candidates": [[2.0], [-2.0], [0.0]],
    "actions": [2, 3, 1],
    "positions": [[-2.0], [0.0], [2.0]]
  })");
  const CliResult r = run_cli("run --instance " + inst.string() + " --mechanism two-extremes");
  CHECK(r.code == 0);
  CHECK(r.out.find("elected pair: (y1, y3)") != std::string::npos);
}

TEST_CASE("check-sp: strategy-proof mechanism exits 0, planted rule exits 1") {
  const CliResult ok = run_cli("check-sp --instance line3 --mechanism two-extremes --n 3");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"strategy_proof_over_test_set\": true") != std::string::npos);

  const CliResult bad =
      run_cli("check-sp --instance multi4 --mechanism planted-nonmonotone --n 4");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"strategy_proof_over_test_set\": false") != std::string::npos);
}

TEST_CASE("distortion: finds the two-extremes worst case") {
  const CliResult r = run_cli("distortion --instance line3 --mechanism two-extremes --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"best_ratio\": 7.0") != std::string::npos);
  const CliResult rd = run_cli("distortion --instance line3 --mechanism random-dictator --n 3");
  CHECK(rd.code == 2);
}

TEST_CASE("reproduce: every claim id passes end-to-end") {
  const std::vector<std::string> ids = {
      "two-extremes-tight --n 5",
      "pair-independent-valid --n 12",
      "pair-independent-bound --m 4 --r 3 --n 3",
      "sequential-dictator-tight --n 5 --r 3",
      "seven-thirds --grid-step 0.01",
      "det-impossibility --r 3",
      "sp-suites --n 4",
      "line-lower-bounds",
      "random-dictator-unique --n 4 --m 4 --r 3",
      "opt-oracle",
      "thm-line --sigma 9 --n 10 --k 2 --t 0",
      "thm-sigma6 --m 4 --r 3 --n 3",
      "two-extremes-worst --n 5",
      "sequential-dictator-worst --r 3 --n 5",
      // profile families carry canonical defaults
      "thm-line",
      "thm-sigma6",
      "two-extremes-worst",
      "sequential-dictator-worst",
  };
  for (const std::string& id : ids) {
    const CliResult r = run_cli("reproduce " + id);
    INFO("claim: ", id, "\nstdout: ", r.out, "\nstderr: ", r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
}

TEST_CASE("reproduce: unknown claim lists the catalogue") {
  const CliResult r = run_cli("reproduce nonsense");
  CHECK(r.code == 2);
  CHECK(r.err.find("two-extremes-tight") != std::string::npos);
  CHECK(r.err.find("det-impossibility") != std::string::npos);
}

TEST_CASE("sweep: CSV rows stay under the analytic ceiling") {
  const CliResult r = run_cli(
      "sweep --instance line4 --mechanism pair-independent --n-list 6 --sigma-list 3,5,9 "
      "--format csv --no-timing");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "n,sigma,mechanism,empirical_distortion,analytic_upper_bound,analytic_lower_bound,"
        "runtime_ms,seed");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 8);
    CHECK(std::stod(fields[3]) <= std::stod(fields[4]) + 1e-9);
    CHECK(fields[6] == "0");  // --no-timing
  }
  CHECK(rows == 3);
}

TEST_CASE("sweep: identical config and seed give byte-identical output") {
  const std::string args =
      "sweep --instance multi4 --mechanism sequential-dictator --n-list 3..4 --r-list 3,10 "
      "--seed 7 --format csv --no-timing";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("sequential-dictator") != std::string::npos);
}

TEST_CASE("sweep: infeasible points are skipped with a reason, empty grid keeps the header") {
  const CliResult r = run_cli(
      "sweep --instance line4 --mechanism two-extremes --n-list 3 --sigma-list 2 --format csv "
      "--no-timing");
  CHECK(r.code == 0);
  CHECK(r.err.find("skipping") != std::string::npos);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("n,sigma,mechanism", 0) == 0);
  std::string rest;
  std::getline(lines, rest);
  CHECK(rest.empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("run --instance unknown-builtin --actions 1").code == 2);
  CHECK(run_cli("run --instance line3").code == 2);  // neither actions nor positions
}

TEST_CASE("out files are written") {
  const fs::path dir = fs::temp_directory_path() / "scv_cli_tests";
  const fs::path out = dir / "report.json";
  const CliResult r = run_cli("distortion --instance line3 --mechanism two-extremes --n 4 --out " +
                              out.string());
  CHECK(r.code == 0);
  CHECK(slurp(out).find("\"best_ratio\": 5.0") != std::string::npos);
}
