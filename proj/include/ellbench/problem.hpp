#ifndef ELLBENCH_PROBLEM_HPP
#define ELLBENCH_PROBLEM_HPP

#include <ellbench/types.hpp>

namespace ellbench {

// One of the three benchmark geometries. All fields reduce to functions of a
// single coordinate: x in [0, x0] for the rectangle (zero-flux side walls make
// solutions independent of y), r in [r1, r2] for annulus and spherical shell.
class Geometry {
public:
  static Geometry rectangle(double x0, double y0);
  static Geometry annulus(double r1, double r2);
  static Geometry shell(double r1, double r2);

  Domain domain() const noexcept { return domain_; }
  double x0() const;
  double y0() const;
  double r1() const;
  double r2() const;

  // 1D coordinate interval of the reduced problem.
  double lower() const noexcept;
  double upper() const noexcept;
  double span() const noexcept { return upper() - lower(); }

  // Volume weight of the 1D reduction: integral over the domain of f equals
  // the 1D integral of f(c) * volume_weight(c).
  double volume_weight(double c) const noexcept;
  // Flux weight w in the radial operator -(1/w)(w v')': 1, r, r^2.
  double flux_weight(double c) const noexcept;

private:
  Geometry(Domain d, double a, double b) : domain_(d), a_(a), b_(b) {}
  Domain domain_;
  double a_, b_; // (x0, y0) or (r1, r2)
};

struct Measures {
  double volume;
  double gamma1; // measure of the Dirichlet/Robin boundary piece
  double gamma2; // measure of the flux boundary piece
};

Measures domain_measures(const Geometry& geom);

// Constant problem data and regularization weights.
struct ProblemData {
  double g = 0.0;   // internal energy density
  double q = 0.0;   // heat flux on Gamma2
  double b = 0.0;   // temperature datum on / near Gamma1
  double z_d = 0.0; // desired state
  double m1 = 1.0, m2 = 1.0, m3 = 1.0, m4 = 1.0, m5 = 1.0;
};

// Throws Error(constraint_violation) naming the failed invariant.
void validate(const ProblemData& data);

// Validates alpha > 0 and finite; returns it.
double checked_alpha(double alpha);

struct Problem {
  Geometry geometry;
  ProblemData data;
};

} // namespace ellbench

#endif
