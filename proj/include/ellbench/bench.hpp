#ifndef ELLBENCH_BENCH_HPP
#define ELLBENCH_BENCH_HPP

#include <string>
#include <vector>

#include <ellbench/convergence.hpp>
#include <ellbench/optimal_control.hpp>
#include <ellbench/problem.hpp>

namespace ellbench {

struct AlphaGrid {
  double start = 1e2;
  double stop = 1e6;
  int points = 8;
};

struct Tolerances {
  double self = 1e-10;   // closed-form self-consistency (relative)
  double oracle = 1e-8;  // oracle vs analytic (relative)
  double limit = 1e-3;   // sweep extrapolation vs tabulated limits (relative)
  double ratio_lo = 3.5; // finite-difference refinement ratio band
  double ratio_hi = 4.5;
};

struct BenchConfig {
  Geometry geometry = Geometry::rectangle(1.0, 1.0);
  ProblemData data;
  AlphaGrid alphas;
  int grid_n = 256;
  Tolerances tol;
};

// Built-in problem used when no config file is given.
BenchConfig default_config();

// Parses the JSON problem descriptor; unknown keys are rejected. Throws
// Error(invalid_argument) with a line/field diagnostic.
BenchConfig parse_config(const std::string& json_text);

struct ReportRow {
  std::string domain;
  std::string problem; // control kind or suite section
  std::string variant;
  std::string quantity;
  double reference = 0.0; // closed-form / tabulated value
  double oracle = 0.0;    // independently computed value
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  std::string verdict; // pass | fail | exact | skipped
};

// The full oracle suite for one configured problem: boundary residuals,
// finite-difference refinement ratios, coefficient/quadrature equivalence,
// optimal-control audits, the exact state-gap identity, rate fits and
// limit-constant extrapolations. Mismatching limit rows are emitted as
// formula-audit failures naming the tabulated expression.
std::vector<ReportRow> run_verification(const BenchConfig& config);

bool all_rows_pass(const std::vector<ReportRow>& rows);

// Round-trip-exact number formatting (17 significant digits) used by every
// emitter below; reports are byte-identical across runs for identical config.
std::string format17(double v);

std::string solve_csv(const Geometry& geom, const ProblemData& data, double alpha, int n);
std::string coeffs_json(const Geometry& geom, double alpha);
std::string optimal_json(const Geometry& geom, const ProblemData& data, ControlKind kind,
                         Variant variant, double alpha);
std::string sweep_csv(const Geometry& geom, const ProblemData& data, GapQuantity quantity,
                      const AlphaGrid& grid);
std::string limits_json(const Geometry& geom, const ProblemData& data,
                        const AlphaGrid& grid, double limit_tol);
std::string rows_csv(const std::vector<ReportRow>& rows);
std::string verify_table(const std::vector<ReportRow>& rows);

// Aggregation of row CSVs from a run directory (files matching *_rows.csv,
// lexicographic order) into one CSV plus a JSON summary.
struct AggregateReport {
  std::string csv;
  std::string summary_json;
};
AggregateReport aggregate_report(const std::string& directory);

ControlKind parse_problem(const std::string& name);

} // namespace ellbench

#endif
