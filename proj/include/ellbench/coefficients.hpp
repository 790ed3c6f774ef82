#ifndef ELLBENCH_COEFFICIENTS_HPP
#define ELLBENCH_COEFFICIENTS_HPP

#include <array>

#include <ellbench/problem.hpp>

namespace ellbench {

// Six coefficients of the quadratic expansion of (1/2)||u - z_d||^2 in the
// data (g, q, b - z_d). k3 of the Robin variant equals the Dirichlet k3 for
// every alpha.
struct CoefficientSet {
  std::array<double, 6> k{};
  Domain domain = Domain::rectangle;
  Variant variant = Variant::dirichlet;
  double alpha = 0.0;
};

CoefficientSet dirichlet_coefficients(const Geometry& geom);
CoefficientSet robin_coefficients(const Geometry& geom, double alpha);

// Geometry factors of the expansion: with d = b - z_d,
//   (1/2)||u - z_d||^2 = prefactor * sum_i k[i] * m[i] * datum_i,
// datum = (g^2, q^2, d^2, g q, g d, q d).
struct MisfitWeights {
  double prefactor;
  std::array<double, 6> m;
};

MisfitWeights misfit_weights(const Geometry& geom);

double half_squared_misfit(const Geometry& geom, const ProblemData& data,
                           Variant variant, double alpha = 0.0);

} // namespace ellbench

#endif
