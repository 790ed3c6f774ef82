#ifndef ELLBENCH_ORACLE_HPP
#define ELLBENCH_ORACLE_HPP

#include <functional>
#include <vector>

#include <ellbench/closed_form.hpp>
#include <ellbench/problem.hpp>

namespace ellbench {

// Uniform 1D grid with n intervals (n even, n >= 8) spanning the reduced
// coordinate interval of the geometry.
struct Grid1D {
  Domain domain;
  int n;
  double lo, hi, h;
  std::vector<double> nodes; // n + 1 entries
};

Grid1D make_grid(const Geometry& geom, int n);

struct DiscreteSolution {
  Grid1D grid;
  std::vector<double> values;
};

// Second-order finite-difference solve of -(1/w)(w v')' = f in conservative
// form (flux differencing at half nodes), with the boundary conditions of the
// requested field and variant imposed by ghost-node elimination. The adjoint
// source u - z_d is evaluated from the closed-form state so the two solves do
// not compound errors.
DiscreteSolution solve_bvp(const Geometry& geom, const ProblemData& data,
                           Variant variant, double alpha, FieldKind field, int n);

// End-to-end variant: the adjoint source comes from the discrete state.
DiscreteSolution solve_bvp_chained(const Geometry& geom, const ProblemData& data,
                                   Variant variant, double alpha, int n);

// Composite Simpson approximation of the weighted squared norm
// integral of f(c)^2 * volume_weight(c); n must be even.
double weighted_l2(const Geometry& geom, const std::function<double(double)>& f, int n);

// Refines the Simpson grid until two successive levels agree to rel_tol.
double weighted_l2_auto(const Geometry& geom, const std::function<double(double)>& f,
                        double rel_tol = 1e-12);

struct ScalarMinimum {
  double argmin;
  double value;
};

// Recovers the exact quadratic through evaluations at -s, 0, +s and returns
// its vertex; a fourth evaluation at 2s guards against non-quadratic input.
ScalarMinimum minimize_scalar_quadratic(const std::function<double(double)>& j,
                                        double scale);

struct PairMinimum {
  double g, q;
  double value;
};

// Recovers the full bivariate quadratic from six evaluations and solves the
// 2x2 SPD stationarity system.
PairMinimum minimize_pair_quadratic(const std::function<double(double, double)>& j,
                                    double scale);

} // namespace ellbench

#endif
