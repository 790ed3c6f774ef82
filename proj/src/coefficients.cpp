#include <ellbench/coefficients.hpp>

#include <cmath>
#include <numbers>

namespace ellbench {

namespace {

CoefficientSet rect_table(double x0, Variant var, double al) {
  CoefficientSet c;
  c.domain = Domain::rectangle;
  c.variant = var;
  c.alpha = al;
  c.k = {2.0 / 15.0, 1.0 / 3.0, 1.0, -5.0 / 12.0, 2.0 / 3.0, -1.0};
  if (var == Variant::robin) {
    const double ia = 1.0 / (al * x0);
    c.k[0] += 2.0 / 3.0 * ia + ia * ia;
    c.k[1] += ia + ia * ia;
    // k3 is alpha-independent.
    c.k[3] += -5.0 / 3.0 * ia - 2.0 * ia * ia;
    c.k[4] += 2.0 * ia;
    c.k[5] += -2.0 * ia;
  }
  return c;
}

CoefficientSet annulus_table(double r1, double r2, Variant var, double al) {
  CoefficientSet c;
  c.domain = Domain::annulus;
  c.variant = var;
  c.alpha = al;
  const double s = r2 / r1, lr = std::log(r2 / r1);
  const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s5 = s4 * s, s6 = s4 * s2;
  c.k[0] = (-1.0 / 12.0 + 5.0 / 8.0 * s2 + s4 * (lr - 1.25) +
            s6 * (lr * lr - 1.5 * lr + 17.0 / 24.0)) / 8.0;
  c.k[1] = (-s2 + s4 * (2.0 * lr * lr - 2.0 * lr + 1.0)) / 4.0;
  c.k[2] = 0.5 * (-1.0 + s2);
  c.k[3] = (-3.0 / 8.0 * s + s3 * (1.5 - lr) +
            s5 * (-2.0 * lr * lr + 2.5 * lr - 9.0 / 8.0)) / 4.0;
  c.k[4] = 0.5 * (-0.25 + s2 + s4 * (lr - 0.75));
  c.k[5] = -(0.5 * s + s3 * (lr - 0.5));
  if (var == Variant::robin) {
    const double ia = 1.0 / (al * r1), ia2 = ia * ia;
    c.k[0] += (0.5 * ia - ia2 + s2 * (-2.5 * ia + 3.0 * ia2) +
               s4 * ((3.5 - 2.0 * lr) * ia - 3.0 * ia2) +
               s6 * (-1.5 * ia + 2.0 * lr * ia + ia2)) / 8.0;
    c.k[1] += (-s2 * (2.0 * ia2 - 2.0 * ia) + s4 * (2.0 * ia2 + (4.0 * lr - 2.0) * ia)) / 4.0;
    c.k[3] += (s * (1.5 * ia - 2.0 * ia2) + s3 * ((2.0 * lr - 4.0) * ia + 4.0 * ia2) +
               s5 * (-4.0 * lr * ia + 2.5 * ia - 2.0 * ia2)) / 4.0;
    c.k[4] += 0.5 * (ia - 2.0 * s2 * ia + s4 * ia);
    c.k[5] += s * ia - s3 * ia;
  }
  return c;
}

CoefficientSet shell_table(double r1, double r2, Variant var, double al) {
  CoefficientSet c;
  c.domain = Domain::shell;
  c.variant = var;
  c.alpha = al;
  const double s = r2 / r1;
  const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s5 = s4 * s, s6 = s4 * s2,
               s7 = s6 * s, s8 = s4 * s4, s9 = s8 * s;
  c.k[0] = -2.0 / 945.0 + s3 / 45.0 - s5 / 15.0 + s7 / 7.0 - 2.0 / 15.0 * s8 + s9 / 27.0;
  c.k[1] = -1.0 / 3.0 + s - s2 + s3 / 3.0;
  c.k[2] = (-1.0 + s3) / 3.0;
  c.k[3] = -7.0 / 180.0 + s2 / 6.0 + s3 / 9.0 - 0.75 * s4 + 11.0 / 15.0 * s5 - 2.0 / 9.0 * s6;
  c.k[4] = -2.0 / 45.0 + 2.0 / 9.0 * s3 - 0.4 * s5 + 2.0 / 9.0 * s6;
  c.k[5] = -1.0 / 3.0 + s2 - 2.0 / 3.0 * s3;
  if (var == Variant::robin) {
    const double ia = 1.0 / (al * r1), ia2 = ia * ia;
    c.k[0] += 2.0 / 135.0 * ia - ia2 / 27.0 + s3 * (-4.0 / 45.0 * ia + ia2 / 9.0) +
              s5 * 2.0 / 15.0 * ia - s6 * ia2 / 9.0 - 2.0 / 15.0 * s8 * ia +
              s9 * (2.0 * ia + ia2) / 27.0;
    c.k[1] += (ia - ia2) / 3.0 - s2 * ia + s3 * (2.0 * ia + ia2) / 3.0;
    // the alpha^-2 constant term is -2/9, not the printed -2 (see ledger)
    c.k[3] += 7.0 / 45.0 * ia - 2.0 / 9.0 * ia2 - s2 * ia / 3.0 +
              s3 * (-ia + 4.0 * ia2) / 9.0 + 11.0 / 15.0 * s5 * ia -
              2.0 / 9.0 * s6 * (2.0 * ia + ia2);
    c.k[4] += 2.0 / 9.0 * ia - 4.0 / 9.0 * s3 * ia + 2.0 / 9.0 * s6 * ia;
    c.k[5] += 2.0 / 3.0 * ia - 2.0 / 3.0 * s3 * ia;
  }
  return c;
}

} // namespace

CoefficientSet dirichlet_coefficients(const Geometry& geom) {
  switch (geom.domain()) {
    case Domain::rectangle: return rect_table(geom.x0(), Variant::dirichlet, 0.0);
    case Domain::annulus: return annulus_table(geom.r1(), geom.r2(), Variant::dirichlet, 0.0);
    case Domain::shell: return shell_table(geom.r1(), geom.r2(), Variant::dirichlet, 0.0);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

CoefficientSet robin_coefficients(const Geometry& geom, double alpha) {
  checked_alpha(alpha);
  switch (geom.domain()) {
    case Domain::rectangle: return rect_table(geom.x0(), Variant::robin, alpha);
    case Domain::annulus: return annulus_table(geom.r1(), geom.r2(), Variant::robin, alpha);
    case Domain::shell: return shell_table(geom.r1(), geom.r2(), Variant::robin, alpha);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

MisfitWeights misfit_weights(const Geometry& geom) {
  const double pi = std::numbers::pi;
  switch (geom.domain()) {
    case Domain::rectangle: {
      const double x0 = geom.x0();
      const double x2 = x0 * x0, x3 = x2 * x0, x4 = x2 * x2, x5 = x4 * x0;
      return {geom.y0() / 2.0, {x5, x3, x0, x4, x3, x2}};
    }
    case Domain::annulus: {
      const double r1 = geom.r1();
      const double r2_ = r1 * r1, r3 = r2_ * r1, r4 = r2_ * r2_, r5 = r4 * r1, r6 = r4 * r2_;
      return {pi, {r6, r4, r2_, r5, r4, r3}};
    }
    case Domain::shell: {
      const double r1 = geom.r1(), r2 = geom.r2();
      const double r1sq = r1 * r1, r2sq = r2 * r2;
      return {2.0 * pi,
              {r1sq * r1sq * r1sq * r1, r1 * r2sq * r2sq, r1sq * r1,
               r1sq * r1sq * r2sq, r1sq * r1sq * r1, r1sq * r2sq}};
    }
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

double half_squared_misfit(const Geometry& geom, const ProblemData& data,
                           Variant variant, double alpha) {
  validate(data);
  const CoefficientSet c = variant == Variant::dirichlet
                               ? dirichlet_coefficients(geom)
                               : robin_coefficients(geom, alpha);
  const MisfitWeights w = misfit_weights(geom);
  const double d = data.b - data.z_d;
  const double datum[6] = {data.g * data.g, data.q * data.q, d * d,
                           data.g * data.q, data.g * d, data.q * d};
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) sum += c.k[i] * w.m[i] * datum[i];
  const double result = w.prefactor * sum;
  if (result < 0.0)
    throw Error(Errc::internal_inconsistency,
                "half_squared_misfit produced a negative squared norm");
  return result;
}

} // namespace ellbench
