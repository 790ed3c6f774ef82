#ifndef ELLBENCH_CLOSED_FORM_HPP
#define ELLBENCH_CLOSED_FORM_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <ellbench/problem.hpp>

namespace ellbench {

// Closed-form 1D evaluator for a system state or adjoint state, together with
// its analytic derivative and the integration constants it was built from.
// Immutable after construction; evaluation is pure.
class Profile {
public:
  Domain domain() const noexcept { return domain_; }
  FieldKind field() const noexcept { return field_; }
  Variant variant() const noexcept { return variant_; }
  double alpha() const noexcept { return alpha_; } // 0 for the Dirichlet variant
  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }

  double value(double c) const { return value_(c); }
  double derivative(double c) const { return deriv_(c); }

  const std::vector<std::pair<std::string, double>>& constants() const noexcept {
    return constants_;
  }

  Profile(Domain d, FieldKind f, Variant v, double alpha, double lo, double hi,
          std::function<double(double)> value, std::function<double(double)> deriv,
          std::vector<std::pair<std::string, double>> constants);

private:
  Domain domain_;
  FieldKind field_;
  Variant variant_;
  double alpha_;
  double lo_, hi_;
  std::function<double(double)> value_, deriv_;
  std::vector<std::pair<std::string, double>> constants_;
};

Profile state_dirichlet(const Geometry& geom, const ProblemData& data);
Profile adjoint_dirichlet(const Geometry& geom, const ProblemData& data);
Profile state_robin(const Geometry& geom, const ProblemData& data, double alpha);
Profile adjoint_robin(const Geometry& geom, const ProblemData& data, double alpha);

struct BoundaryResiduals {
  double gamma1;  // boundary-condition residual on Gamma1 (Dirichlet or Robin)
  double gamma2;  // flux residual on Gamma2
  double pde_max; // max residual of the governing equation on an n-point grid
  // Natural magnitudes of the condition terms; residual / scale is the
  // relative residual (the Robin condition subtracts terms of size alpha*|v|,
  // so its rounding floor grows with alpha).
  double gamma1_scale;
  double gamma2_scale;
};

// Residuals of the profile against its own boundary conditions and PDE,
// sampled with a second-order conservative stencil on n intervals.
BoundaryResiduals boundary_residuals(const Profile& profile, const Geometry& geom,
                                     const ProblemData& data, int n = 256);

} // namespace ellbench

#endif
