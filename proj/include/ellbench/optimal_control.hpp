#ifndef ELLBENCH_OPTIMAL_CONTROL_HPP
#define ELLBENCH_OPTIMAL_CONTROL_HPP

#include <ellbench/coefficients.hpp>
#include <ellbench/problem.hpp>

namespace ellbench {

// Scalar cost as J(v) = a v^2 + b v + c with a > 0.
struct QuadraticCost {
  double a, b, c;
  double minimizer() const { return -b / (2.0 * a); }
  double minimum() const { return c - b * b / (4.0 * a); }
  double operator()(double v) const { return (a * v + b) * v + c; }
};

// Pair cost J(g, q) = agg g^2 + aqq q^2 + agq g q + bg g + bq q + c with a
// positive-definite quadratic part.
struct PairQuadraticCost {
  double agg, aqq, agq, bg, bq, c;
  double operator()(double vg, double vq) const {
    return agg * vg * vg + aqq * vq * vq + agq * vg * vq + bg * vg + bq * vq + c;
  }
};

struct ControlSolution {
  ControlKind kind;
  Variant variant;
  double alpha;        // 0 for Dirichlet
  double control[2];   // scalar kinds use control[0]; simultaneous uses (g, q)
  double cost;         // optimal value from the tabulated closed form
};

// Cost of the scalar control problem as an explicit quadratic, assembled from
// the coefficient tables plus the regularization term.
QuadraticCost cost_quadratic(const Geometry& geom, const ProblemData& data,
                             ControlKind kind, Variant variant, double alpha = 0.0);
PairQuadraticCost pair_cost_quadratic(const Geometry& geom, const ProblemData& data,
                                      Variant variant, double alpha = 0.0);

ControlSolution optimal_distributed(const Geometry& geom, const ProblemData& data,
                                    Variant variant, double alpha = 0.0);
ControlSolution optimal_flux(const Geometry& geom, const ProblemData& data,
                             Variant variant, double alpha = 0.0);
ControlSolution optimal_temperature(const Geometry& geom, const ProblemData& data,
                                    Variant variant, double alpha = 0.0);
// Computes the pair twice, via the tabulated ratio formulas and via a direct
// 2x2 SPD solve of the quadratic; throws Error(internal_inconsistency) if the
// two disagree beyond relative 1e-12.
ControlSolution optimal_simultaneous(const Geometry& geom, const ProblemData& data,
                                     Variant variant, double alpha = 0.0);

ControlSolution optimal_control(const Geometry& geom, const ProblemData& data,
                                ControlKind kind, Variant variant, double alpha = 0.0);

// Cost at an arbitrary control: substitutes the control into the data, forms
// the misfit through the coefficient tables and adds the regularization term.
// v1 is ignored for scalar kinds.
double evaluate_cost(const Geometry& geom, const ProblemData& data, ControlKind kind,
                     double v0, double v1, Variant variant, double alpha = 0.0);

} // namespace ellbench

#endif
