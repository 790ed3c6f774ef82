#ifndef ELLBENCH_CONVERGENCE_HPP
#define ELLBENCH_CONVERGENCE_HPP

#include <span>
#include <string>
#include <vector>

#include <ellbench/problem.hpp>

namespace ellbench {

// Quantities whose Robin -> Dirichlet gap is swept in alpha.
enum class GapQuantity {
  state_l2,   // ||u_a - u||_L2
  adjoint_l2, // ||p_a - p||_L2
  ctrl_g,
  ctrl_q,
  ctrl_b,
  ctrl_gq_g,
  ctrl_gq_q,
  cost_j1,
  cost_j2,
  cost_j3,
  cost_j4,
  coeff_k1,
  coeff_k2,
  coeff_k3,
  coeff_k4,
  coeff_k5,
  coeff_k6,
};

const char* to_string(GapQuantity s);
GapQuantity parse_quantity(const std::string& name);

struct SweepRecord {
  double alpha;
  double dirichlet_value; // alpha-independent reference value (0 for norm gaps)
  double robin_value;
  double gap; // nonnegative
  double alpha_times_gap;
};

struct RateFit {
  bool exact_zero = false; // all gaps identically zero; no fit performed
  bool degenerate = false; // some (not all) gaps vanished; no fit performed
  int points = 0;
  double slope = 0.0;      // least-squares slope of log(gap) vs log(alpha)
  double intercept = 0.0;
  double r_squared = 0.0;
  double extrapolated = 0.0;   // limit of alpha*gap from the model L + c/alpha
  double model_residual = 0.0; // worst relative deviation of the model on the
                               // sweep points not used for extrapolation
};

// Closed-form limit of alpha * gap, tabulated from the explicit formulas.
// `formula` is a short rendering of the tabulated expression, used to name it
// in formula-audit reports.
struct LimitConstant {
  std::string name;
  std::string formula;
  double value = 0.0;
  bool has_closed_form = false;
};

std::vector<double> geometric_grid(double start, double stop, int points);

// Computes the Dirichlet and Robin quantity at each alpha and records gaps.
// Alphas must be strictly increasing and positive.
std::vector<SweepRecord> alpha_sweep(const Geometry& geom, const ProblemData& data,
                                     GapQuantity quantity, std::span<const double> alphas);

RateFit fit_order(std::span<const SweepRecord> records);

// Exact finite-alpha state gap alpha * ||u_a - u||: the pointwise difference
// is spatially constant, so the norm is |difference| * sqrt(volume). Computed
// from the explicit difference formula (cancellation-free).
double state_gap_norm(const Geometry& geom, const ProblemData& data, double alpha);

LimitConstant state_gap_constant(const Geometry& geom, const ProblemData& data);
LimitConstant adjoint_gap_limit(const Geometry& geom, const ProblemData& data);
LimitConstant control_gap_limit(const Geometry& geom, const ProblemData& data,
                                GapQuantity quantity);
LimitConstant cost_gap_limit(const Geometry& geom, const ProblemData& data,
                             GapQuantity quantity);

// Dispatcher over the four families; coeff_* quantities have no tabulated
// closed-form limit and return has_closed_form = false.
LimitConstant closed_form_limit(const Geometry& geom, const ProblemData& data,
                                GapQuantity quantity);

} // namespace ellbench

#endif
