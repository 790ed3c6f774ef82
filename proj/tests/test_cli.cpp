// End-to-end checks of the installed CLI binary: exit codes, output schemas
// and byte-level determinism across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string cli = ELLBENCH_CLI_PATH;

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = cli + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file;
  cmd += " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_count(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ellbench_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("verify on the default config exits 0") {
  TempDir tmp;
  const int rc = run("verify --out " + (tmp.path / "run").string(),
                     (tmp.path / "table.txt").string());
  CHECK(rc == 0);
  const std::string rows = slurp(tmp.path / "run" / "verify_rows.csv");
  CHECK(rows.find(",fail") == std::string::npos);
  CHECK(rows.rfind("domain,problem,variant,quantity", 0) == 0);
}

TEST_CASE("malformed config exits 2 with a diagnostic") {
  TempDir tmp;
  std::ofstream(tmp.path / "bad.json") << "{\"domain\": oops";
  CHECK(run("verify --config " + (tmp.path / "bad.json").string()) == 2);
  std::ofstream(tmp.path / "unknown.json")
      << R"({"domain": {"type": "rectangle", "x0": 1, "y0": 1},
             "data": {"g":0,"q":0,"b":0,"z_d":0},
             "regularization": {"M1":1,"M2":1,"M3":1,"M4":1,"M5":1},
             "extra": 1})";
  CHECK(run("verify --config " + (tmp.path / "unknown.json").string()) == 2);
}

TEST_CASE("sweep emits exactly 8 data rows plus header") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep.csv";
  CHECK(run("sweep --quantity ctrl_b --alpha-points 8", out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(line_count(csv) == 9);
  CHECK(csv.rfind("alpha,quantity,dirichlet_value,robin_value,gap,alpha_times_gap\n", 0) ==
        0);
}

TEST_CASE("solve emits the documented columns") {
  TempDir tmp;
  const fs::path out = tmp.path / "solve.csv";
  CHECK(run("solve --domain shell --alpha 100 --n 17", out.string()) == 0);
  const std::string csv = slurp(out);
  CHECK(line_count(csv) == 18);
  CHECK(csv.rfind("coord,u,p,u_alpha,p_alpha\n", 0) == 0);
}

TEST_CASE("verify twice produces byte-identical reports") {
  TempDir tmp;
  const fs::path run1 = tmp.path / "r1", run2 = tmp.path / "r2";
  CHECK(run("verify --out " + run1.string(), (tmp.path / "t1").string()) == 0);
  CHECK(run("verify --out " + run2.string(), (tmp.path / "t2").string()) == 0);
  const std::string a = slurp(run1 / "verify_rows.csv");
  const std::string b = slurp(run2 / "verify_rows.csv");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(slurp(tmp.path / "t1") == slurp(tmp.path / "t2"));
}

TEST_CASE("report aggregates a run directory") {
  TempDir tmp;
  const fs::path rundir = tmp.path / "run";
  CHECK(run("verify --out " + rundir.string(), (tmp.path / "t").string()) == 0);
  CHECK(run("limits --out " + rundir.string()) == 0); // adds limits.json (ignored by report)
  const fs::path repdir = tmp.path / "rep";
  CHECK(run("report " + rundir.string() + " --out " + repdir.string()) == 0);
  const std::string rep = slurp(repdir / "report.csv");
  const std::string summary = slurp(repdir / "summary.json");
  CHECK(rep.rfind("domain,problem,variant,quantity", 0) == 0);
  CHECK(summary.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("optimal subcommand emits the documented JSON keys") {
  TempDir tmp;
  const fs::path out = tmp.path / "optimal.json";
  CHECK(run("optimal --domain annulus --problem gq --variant robin:250", out.string()) == 0);
  const std::string json = slurp(out);
  for (const char* key :
       {"\"control\"", "\"cost\"", "\"oracle_control\"", "\"oracle_cost\"", "\"rel_gap\""})
    CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("unknown flags exit with the config error code") {
  CHECK(run("optimal --problem zz") == 2);
  CHECK(run("sweep --quantity nope") == 2);
}
