// Benchmark CLI. Talks to the library exclusively through the C API in
// ellbench.h; all numerics live behind that boundary.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <ellbench.h>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::string domain;
  double alpha = 100.0;
  int n = 256;
  double alpha_start = 1e2, alpha_stop = 1e6;
  int alpha_points = 8;
  double tol_self = 1e-10, tol_oracle = 1e-8, tol_limit = 1e-3;
};

std::string default_problem_json(const std::string& domain) {
  // Built-in benchmark problem; every tabulated limit is verifiable on it.
  if (domain == "annulus")
    return R"({"domain": {"type": "annulus", "r1": 1.0, "r2": 2.0},
               "data": {"g": 1.0, "q": 1.0, "b": 0.0, "z_d": 0.0},
               "regularization": {"M1": 1.0, "M2": 1.0, "M3": 1.0, "M4": 1.0, "M5": 1.0}})";
  if (domain == "shell")
    return R"({"domain": {"type": "shell", "r1": 1.0, "r2": 2.0},
               "data": {"g": 1.0, "q": 0.0, "b": 1.0, "z_d": 0.0},
               "regularization": {"M1": 1.0, "M2": 1.0, "M3": 1.0, "M4": 1.0, "M5": 1.0}})";
  return R"({"domain": {"type": "rectangle", "x0": 1.0, "y0": 1.0},
             "data": {"g": 1.0, "q": 0.0, "b": 0.0, "z_d": 0.0},
             "regularization": {"M1": 1.0, "M2": 1.0, "M3": 1.0, "M4": 1.0, "M5": 1.0}})";
}

int fail_config(const std::string& what) {
  std::cerr << "config error: " << what << "\n";
  return kExitConfigError;
}

ellbench_problem* load_problem(const CommonOpts& opts, int& exit_code) {
  std::string text;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      exit_code = fail_config("cannot read " + opts.config_path);
      return nullptr;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = default_problem_json(opts.domain);
  }
  ellbench_problem* problem = nullptr;
  if (ellbench_problem_parse(text.c_str(), &problem) != ELLBENCH_OK) {
    exit_code = fail_config(ellbench_last_error());
    return nullptr;
  }
  return problem;
}

bool write_file(const std::string& dir, const std::string& name, const char* text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(fs::path(dir) / name, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

int emit(const CommonOpts& opts, const std::string& filename, char* text, int err) {
  if (err != ELLBENCH_OK || !text) {
    std::cerr << "error: " << ellbench_last_error() << "\n";
    return err == ELLBENCH_EINVAL || err == ELLBENCH_ECONSTRAINT ? kExitConfigError
                                                                 : kExitVerifyFailed;
  }
  if (!opts.out_dir.empty()) {
    if (!write_file(opts.out_dir, filename, text)) {
      ellbench_string_free(text);
      std::cerr << "error: cannot write " << filename << " under " << opts.out_dir << "\n";
      return kExitConfigError;
    }
  } else {
    std::fputs(text, stdout);
  }
  ellbench_string_free(text);
  return 0;
}

int problem_code(const std::string& name, int& code) {
  if (name == "g") code = ELLBENCH_PROBLEM_G;
  else if (name == "q") code = ELLBENCH_PROBLEM_Q;
  else if (name == "b") code = ELLBENCH_PROBLEM_B;
  else if (name == "gq") code = ELLBENCH_PROBLEM_GQ;
  else return fail_config("unknown --problem " + name + " (expected g|q|b|gq)");
  return 0;
}

// "dirichlet" or "robin:<alpha>"
int variant_code(const std::string& name, int& bc, double& alpha) {
  if (name == "dirichlet") {
    bc = ELLBENCH_BC_DIRICHLET;
    return 0;
  }
  if (name.rfind("robin", 0) == 0) {
    bc = ELLBENCH_BC_ROBIN;
    if (name.size() > 6 && name[5] == ':') {
      try {
        alpha = std::stod(name.substr(6));
      } catch (...) {
        return fail_config("cannot parse alpha in --variant " + name);
      }
    }
    return 0;
  }
  return fail_config("unknown --variant " + name + " (expected dirichlet|robin:<alpha>)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form elliptic optimal-control benchmark"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string problem_name = "g";
  std::string variant_name = "dirichlet";
  std::string quantity = "ctrl_b";
  std::string report_dir;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "JSON problem descriptor");
    cmd->add_option("--out", opts.out_dir, "output directory (default: stdout)");
    cmd->add_option("--domain", opts.domain,
                    "built-in problem to use when no --config is given "
                    "(rectangle|annulus|shell)");
    cmd->add_option("--alpha", opts.alpha, "heat-transfer coefficient for Robin fields");
    cmd->add_option("--n", opts.n, "grid size / sample count");
    cmd->add_option("--alpha-start", opts.alpha_start, "sweep grid start");
    cmd->add_option("--alpha-stop", opts.alpha_stop, "sweep grid stop");
    cmd->add_option("--alpha-points", opts.alpha_points, "sweep grid points");
    cmd->add_option("--tol-self", opts.tol_self, "self-consistency tolerance");
    cmd->add_option("--tol-oracle", opts.tol_oracle, "oracle tolerance");
    cmd->add_option("--tol-limit", opts.tol_limit, "limit-extrapolation tolerance");
  };

  CLI::App* solve = app.add_subcommand("solve", "sample u, p, u_alpha, p_alpha as CSV");
  add_common(solve);
  CLI::App* coeffs = app.add_subcommand("coeffs", "misfit-expansion coefficients as JSON");
  add_common(coeffs);
  CLI::App* optimal = app.add_subcommand("optimal", "analytic optimum vs oracle as JSON");
  add_common(optimal);
  optimal->add_option("--problem", problem_name, "g|q|b|gq");
  optimal->add_option("--variant", variant_name, "dirichlet|robin:<alpha>");
  CLI::App* sweep = app.add_subcommand("sweep", "alpha sweep of one gap quantity as CSV");
  add_common(sweep);
  sweep->add_option("--quantity", quantity,
                    "state_l2|adjoint_l2|ctrl_g|ctrl_q|ctrl_b|ctrl_gq_g|ctrl_gq_q|"
                    "cost_J1..cost_J4|coeff_k1..coeff_k6");
  CLI::App* limits = app.add_subcommand("limits", "limit constants vs extrapolation as JSON");
  add_common(limits);
  CLI::App* verify = app.add_subcommand("verify", "run the full oracle suite");
  add_common(verify);
  CLI::App* report = app.add_subcommand("report", "aggregate *_rows.csv from a run directory");
  report->add_option("--out", opts.out_dir, "output directory (default: stdout)");
  report->add_option("dir", report_dir, "run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  if (app.got_subcommand(report)) {
    int err = ELLBENCH_OK;
    char* summary = nullptr;
    char* csv = ellbench_report_aggregate(report_dir.c_str(), &summary, &err);
    if (err != ELLBENCH_OK || !csv) return fail_config(ellbench_last_error());
    int rc = 0;
    if (!opts.out_dir.empty()) {
      if (!write_file(opts.out_dir, "report.csv", csv) ||
          !write_file(opts.out_dir, "summary.json", summary ? summary : "{}"))
        rc = fail_config("cannot write report files");
    } else {
      std::fputs(csv, stdout);
      if (summary) std::fputs(summary, stdout);
    }
    ellbench_string_free(csv);
    ellbench_string_free(summary);
    return rc;
  }

  int exit_code = 0;
  ellbench_problem* problem = load_problem(opts, exit_code);
  if (!problem) return exit_code;

  int rc = 0;
  const double grid[3] = {opts.alpha_start, opts.alpha_stop,
                          static_cast<double>(opts.alpha_points)};
  int err = ELLBENCH_OK;

  if (app.got_subcommand(solve)) {
    char* text = ellbench_solve_csv(problem, opts.alpha, opts.n, &err);
    rc = emit(opts, "solve.csv", text, err);
  } else if (app.got_subcommand(coeffs)) {
    char* text = ellbench_coeffs_json(problem, opts.alpha, &err);
    rc = emit(opts, "coeffs.json", text, err);
  } else if (app.got_subcommand(optimal)) {
    int code = 0, bc = ELLBENCH_BC_DIRICHLET;
    double alpha = opts.alpha;
    rc = problem_code(problem_name, code);
    if (rc == 0) rc = variant_code(variant_name, bc, alpha);
    if (rc == 0) {
      char* text = ellbench_optimal_json(problem, code, bc, alpha, &err);
      rc = emit(opts, "optimal.json", text, err);
    }
  } else if (app.got_subcommand(sweep)) {
    char* text = ellbench_sweep_csv(problem, quantity.c_str(), grid, &err);
    rc = emit(opts, "sweep.csv", text, err);
  } else if (app.got_subcommand(limits)) {
    char* text = ellbench_limits_json(problem, grid, opts.tol_limit, &err);
    rc = emit(opts, "limits.json", text, err);
  } else if (app.got_subcommand(verify)) {
    char* table = nullptr;
    int status = 0;
    char* rows = ellbench_verify_rows(problem, grid, opts.n, &table, &status, &err);
    if (err != ELLBENCH_OK || !rows) {
      std::cerr << "error: " << ellbench_last_error() << "\n";
      rc = kExitConfigError;
    } else {
      if (table) std::fputs(table, stdout);
      if (!opts.out_dir.empty() && !write_file(opts.out_dir, "verify_rows.csv", rows)) {
        std::cerr << "error: cannot write verify_rows.csv\n";
        rc = kExitConfigError;
      } else {
        rc = status == 0 ? 0 : kExitVerifyFailed;
      }
    }
    ellbench_string_free(rows);
    ellbench_string_free(table);
  }

  ellbench_problem_free(problem);
  return rc;
}
