#include <ellbench/optimal_control.hpp>

#include <cmath>
#include <numbers>

namespace ellbench {

namespace {

constexpr double kPairAgreementTol = 1e-12;

struct Table {
  CoefficientSet c;
  MisfitWeights w;
  Measures meas;
};

Table table_for(const Geometry& geom, Variant var, double al) {
  return {var == Variant::dirichlet ? dirichlet_coefficients(geom)
                                    : robin_coefficients(geom, al),
          misfit_weights(geom), domain_measures(geom)};
}

ProblemData with_control(const ProblemData& base, ControlKind kind, double v0, double v1) {
  ProblemData d = base;
  switch (kind) {
    case ControlKind::distributed: d.g = v0; break;
    case ControlKind::flux: d.q = v0; break;
    case ControlKind::temperature: d.b = v0; break;
    case ControlKind::simultaneous: d.g = v0; d.q = v1; break;
  }
  return d;
}

double regularization(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                      double v0, double v1) {
  const Measures m = domain_measures(geom);
  switch (kind) {
    case ControlKind::distributed: return 0.5 * dt.m1 * v0 * v0 * m.volume;
    case ControlKind::flux: return 0.5 * dt.m2 * v0 * v0 * m.gamma2;
    case ControlKind::temperature: return 0.5 * dt.m3 * v0 * v0 * m.gamma1;
    case ControlKind::simultaneous:
      return 0.5 * dt.m4 * v0 * v0 * m.volume + 0.5 * dt.m5 * v1 * v1 * m.gamma2;
  }
  return 0.0;
}

double sq(double v) { return v * v; }

// Tabulated optimal controls and values, one block per domain, transcribed in
// the grouping of the source tables. d = b - z_d throughout.

struct Tabulated {
  double control[2];
  double value;
};

Tabulated rect_optimal(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                       const CoefficientSet& cs) {
  const double x0 = geom.x0(), y0 = geom.y0();
  const double g = dt.g, q = dt.q, zd = dt.z_d, d = dt.b - dt.z_d;
  const auto& k = cs.k;
  const double x2 = x0 * x0, x3 = x2 * x0, x4 = x2 * x2;
  switch (kind) {
    case ControlKind::distributed: {
      const double den = k[0] + dt.m1 / x4;
      const double gop = -(k[3] * q * x0 + k[4] * d) / (2.0 * x2 * den);
      const double val = x0 * y0 / (8.0 * den) *
                         (4.0 * den * (k[1] * q * q * x2 + k[2] * d * d + k[5] * q * x0 * d) -
                          sq(k[3] * q * x0 + k[4] * d));
      return {{gop, 0.0}, val};
    }
    case ControlKind::flux: {
      const double den = k[1] + dt.m2 / x3;
      const double qop = -(k[3] * g * x2 + k[5] * d) / (2.0 * x0 * den);
      const double val = x0 * y0 / (8.0 * den) *
                         (4.0 * den * (k[0] * g * g * x4 + k[2] * d * d + k[4] * g * x2 * d) -
                          sq(k[3] * g * x2 + k[5] * d));
      return {{qop, 0.0}, val};
    }
    case ControlKind::temperature: {
      const double den = k[2] + dt.m3 / x0;
      const double bop = -(k[4] * g * x2 + k[5] * q * x0 - 2.0 * k[2] * zd) / (2.0 * den);
      const double val =
          x0 * y0 / (8.0 * den) *
          (4.0 * den *
               (k[0] * g * g * x4 + k[1] * q * q * x2 + k[2] * zd * zd +
                k[3] * g * q * x3 - k[4] * g * x2 * zd - k[5] * q * x0 * zd) -
           sq(-2.0 * k[2] * zd + k[4] * g * x2 + k[5] * q * x0));
      return {{bop, 0.0}, val};
    }
    case ControlKind::simultaneous: {
      const double ag = k[0] + dt.m4 / x4;
      const double aq = k[1] + dt.m5 / x3;
      const double den = 4.0 * ag * aq - k[3] * k[3];
      const double delta = (k[3] * k[5] - 2.0 * k[4] * aq) / den;
      const double pi1 = (k[3] * k[4] - 2.0 * k[5] * ag) / den;
      const double val = x0 * y0 * d * d / (2.0 * (k[3] * k[3] - 4.0 * ag * aq)) *
                         (-4.0 * k[2] * ag * aq + k[5] * k[5] * ag + k[4] * k[4] * aq +
                          k[2] * k[3] * k[3] - k[3] * k[4] * k[5]);
      return {{d / x2 * delta, d / x0 * pi1}, val};
    }
  }
  throw Error(Errc::invalid_argument, "unknown control kind");
}

Tabulated annulus_optimal(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                          const CoefficientSet& cs) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, zd = dt.z_d, d = dt.b - dt.z_d;
  const auto& k = cs.k;
  const double pi = std::numbers::pi;
  const double r1sq = r1 * r1, r1cu = r1sq * r1, r1q = r1sq * r1sq;
  switch (kind) {
    case ControlKind::distributed: {
      const double den = k[0] + k[2] * dt.m1 / r1q;
      const double gop = -(k[3] * q * r1 + k[4] * d) / (2.0 * r1sq * den);
      const double val = pi * r1sq *
                         (4.0 * den * (k[1] * q * q * r1sq + k[2] * d * d + k[5] * q * r1 * d) -
                          sq(k[3] * q * r1 + k[4] * d)) /
                         (4.0 * den);
      return {{gop, 0.0}, val};
    }
    case ControlKind::flux: {
      const double den = k[1] + dt.m2 * r2 / r1q;
      const double qop = -(k[3] * g * r1sq + k[5] * d) / (2.0 * r1 * den);
      const double val = pi * r1sq *
                         (4.0 * den * (k[0] * g * g * r1q + k[2] * d * d + k[4] * g * r1sq * d) -
                          sq(k[3] * g * r1sq + k[5] * d)) /
                         (4.0 * den);
      return {{qop, 0.0}, val};
    }
    case ControlKind::temperature: {
      const double den = k[2] + dt.m3 / r1;
      const double bop = -(k[4] * g * r1sq + k[5] * q * r1 - 2.0 * k[2] * zd) / (2.0 * den);
      const double val =
          (4.0 * den *
               (k[0] * g * g * r1q + k[1] * q * q * r1sq + k[2] * zd * zd +
                k[3] * g * q * r1cu - k[4] * g * r1sq * zd - k[5] * q * r1 * zd) -
           sq(-2.0 * k[2] * zd + k[4] * g * r1sq + k[5] * q * r1)) *
          pi * r1sq / (4.0 * den);
      return {{bop, 0.0}, val};
    }
    case ControlKind::simultaneous: {
      const double ag = k[0] + k[2] * dt.m4 / r1q;
      const double aq = k[1] + dt.m5 * r2 / r1q;
      const double den = 4.0 * ag * aq - k[3] * k[3];
      const double delta = (k[3] * k[5] - 2.0 * k[4] * aq) / den;
      const double pi2 = (k[3] * k[4] - 2.0 * k[5] * ag) / den;
      const double val = pi * r1sq * d * d / den *
                         (4.0 * k[2] * ag * aq - k[5] * k[5] * ag - k[4] * k[4] * aq -
                          k[2] * k[3] * k[3] + k[3] * k[4] * k[5]);
      return {{d / r1sq * delta, d / r1 * pi2}, val};
    }
  }
  throw Error(Errc::invalid_argument, "unknown control kind");
}

Tabulated shell_optimal(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                        const CoefficientSet& cs) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, zd = dt.z_d, d = dt.b - dt.z_d;
  const auto& k = cs.k;
  const double pi = std::numbers::pi;
  const double r1sq = r1 * r1, r1cu = r1sq * r1, r1q = r1sq * r1sq;
  const double r2sq = r2 * r2;
  const double qw = r2sq / r1; // q enters through q r2^2 / r1
  switch (kind) {
    case ControlKind::distributed: {
      const double den = k[0] + k[2] * dt.m1 / r1q;
      const double gop = -(k[3] * q * qw + k[4] * d) / (2.0 * r1sq * den);
      const double val =
          (4.0 * den * (k[1] * q * q * qw * qw + k[2] * d * d + k[5] * q * qw * d) -
           sq(k[3] * q * qw + k[4] * d)) *
          pi * r1cu / (2.0 * den);
      return {{gop, 0.0}, val};
    }
    case ControlKind::flux: {
      const double den = k[1] + dt.m2 / (r1 * r2sq);
      const double qop = -r1 / (2.0 * r2sq) * (k[3] * g * r1sq + k[5] * d) / den;
      const double val =
          (4.0 * den * (k[0] * g * g * r1q + k[2] * d * d + k[4] * g * r1sq * d) -
           sq(k[3] * g * r1sq + k[5] * d)) *
          pi * r1cu / (2.0 * den);
      return {{qop, 0.0}, val};
    }
    case ControlKind::temperature: {
      const double den = k[2] + dt.m3 / r1;
      const double bop = -(k[4] * g * r1sq + k[5] * q * qw - 2.0 * k[2] * zd) / (2.0 * den);
      // the z_d cross terms enter with minus signs for both k5 and k6
      const double val =
          (4.0 * den *
               (k[0] * g * g * r1q + k[1] * q * q * qw * qw + k[2] * zd * zd +
                k[3] * g * q * r1 * r2sq - k[4] * g * r1sq * zd - k[5] * q * qw * zd) -
           sq(-2.0 * k[2] * zd + k[4] * g * r1sq + k[5] * q * qw)) *
          pi * r1cu / (2.0 * den);
      return {{bop, 0.0}, val};
    }
    case ControlKind::simultaneous: {
      const double ag = k[0] + k[2] * dt.m4 / r1q;
      const double aq = k[1] + dt.m5 / (r1 * r2sq);
      const double den = 4.0 * ag * aq - k[3] * k[3];
      const double delta = (k[3] * k[5] - 2.0 * k[4] * aq) / den;
      const double pi3 = (k[3] * k[4] - 2.0 * k[5] * ag) / den;
      const double val = (k[3] * k[4] * k[5] + 4.0 * ag * aq * k[2] - ag * k[5] * k[5] -
                          aq * k[4] * k[4] - k[2] * k[3] * k[3]) *
                         2.0 * pi * d * d * r1cu / den;
      return {{d / r1sq * delta, d * r1 / r2sq * pi3}, val};
    }
  }
  throw Error(Errc::invalid_argument, "unknown control kind");
}

Tabulated tabulated_optimal(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                            const CoefficientSet& cs) {
  switch (geom.domain()) {
    case Domain::rectangle: return rect_optimal(geom, dt, kind, cs);
    case Domain::annulus: return annulus_optimal(geom, dt, kind, cs);
    case Domain::shell: return shell_optimal(geom, dt, kind, cs);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

ControlSolution make_solution(const Geometry& geom, const ProblemData& dt, ControlKind kind,
                              Variant var, double al) {
  validate(dt);
  const Table t = table_for(geom, var, al);
  Tabulated tab = tabulated_optimal(geom, dt, kind, t.c);
  if (kind == ControlKind::simultaneous) {
    // Independent route: stationarity of the assembled pair quadratic.
    const PairQuadraticCost pc = pair_cost_quadratic(geom, dt, var, al);
    const double det = 4.0 * pc.agg * pc.aqq - pc.agq * pc.agq;
    if (pc.agg <= 0.0 || det <= 0.0)
      throw Error(Errc::internal_inconsistency,
                  "simultaneous cost quadratic is not positive definite");
    const double sg = (-2.0 * pc.aqq * pc.bg + pc.agq * pc.bq) / det;
    const double sq_ = (-2.0 * pc.agg * pc.bq + pc.agq * pc.bg) / det;
    const double scale = 1.0 + std::abs(tab.control[0]) + std::abs(tab.control[1]);
    if (std::abs(sg - tab.control[0]) > kPairAgreementTol * scale ||
        std::abs(sq_ - tab.control[1]) > kPairAgreementTol * scale)
      throw Error(Errc::internal_inconsistency,
                  "simultaneous control: ratio formulas and SPD solve disagree");
  }
  ControlSolution sol;
  sol.kind = kind;
  sol.variant = var;
  sol.alpha = var == Variant::robin ? al : 0.0;
  sol.control[0] = tab.control[0];
  sol.control[1] = tab.control[1];
  sol.cost = tab.value;
  return sol;
}

} // namespace

QuadraticCost cost_quadratic(const Geometry& geom, const ProblemData& data,
                             ControlKind kind, Variant variant, double alpha) {
  if (kind == ControlKind::simultaneous)
    throw Error(Errc::invalid_argument, "cost_quadratic expects a scalar control kind");
  validate(data);
  const Table t = table_for(geom, variant, alpha);
  const auto& k = t.c.k;
  const auto& m = t.w.m;
  const double pre = t.w.prefactor;
  const double d = data.b - data.z_d;
  const double g = data.g, q = data.q, zd = data.z_d;
  QuadraticCost out{0.0, 0.0, 0.0};
  switch (kind) {
    case ControlKind::distributed:
      out.a = pre * k[0] * m[0] + 0.5 * data.m1 * t.meas.volume;
      out.b = pre * (k[3] * m[3] * q + k[4] * m[4] * d);
      out.c = pre * (k[1] * m[1] * q * q + k[2] * m[2] * d * d + k[5] * m[5] * q * d);
      break;
    case ControlKind::flux:
      out.a = pre * k[1] * m[1] + 0.5 * data.m2 * t.meas.gamma2;
      out.b = pre * (k[3] * m[3] * g + k[5] * m[5] * d);
      out.c = pre * (k[0] * m[0] * g * g + k[2] * m[2] * d * d + k[4] * m[4] * g * d);
      break;
    case ControlKind::temperature:
      out.a = pre * k[2] * m[2] + 0.5 * data.m3 * t.meas.gamma1;
      out.b = pre * (-2.0 * k[2] * m[2] * zd + k[4] * m[4] * g + k[5] * m[5] * q);
      out.c = pre * (k[0] * m[0] * g * g + k[1] * m[1] * q * q + k[2] * m[2] * zd * zd +
                     k[3] * m[3] * g * q - k[4] * m[4] * g * zd - k[5] * m[5] * q * zd);
      break;
    default: break;
  }
  if (out.a <= 0.0)
    throw Error(Errc::internal_inconsistency, "scalar cost quadratic has a <= 0");
  return out;
}

PairQuadraticCost pair_cost_quadratic(const Geometry& geom, const ProblemData& data,
                                      Variant variant, double alpha) {
  validate(data);
  const Table t = table_for(geom, variant, alpha);
  const auto& k = t.c.k;
  const auto& m = t.w.m;
  const double pre = t.w.prefactor;
  const double d = data.b - data.z_d;
  PairQuadraticCost pc{};
  pc.agg = pre * k[0] * m[0] + 0.5 * data.m4 * t.meas.volume;
  pc.aqq = pre * k[1] * m[1] + 0.5 * data.m5 * t.meas.gamma2;
  pc.agq = pre * k[3] * m[3];
  pc.bg = pre * k[4] * m[4] * d;
  pc.bq = pre * k[5] * m[5] * d;
  pc.c = pre * k[2] * m[2] * d * d;
  if (pc.agg <= 0.0 || 4.0 * pc.agg * pc.aqq - pc.agq * pc.agq <= 0.0)
    throw Error(Errc::internal_inconsistency,
                "pair cost quadratic is not positive definite");
  return pc;
}

ControlSolution optimal_distributed(const Geometry& geom, const ProblemData& data,
                                    Variant variant, double alpha) {
  return make_solution(geom, data, ControlKind::distributed, variant, alpha);
}

ControlSolution optimal_flux(const Geometry& geom, const ProblemData& data,
                             Variant variant, double alpha) {
  return make_solution(geom, data, ControlKind::flux, variant, alpha);
}

ControlSolution optimal_temperature(const Geometry& geom, const ProblemData& data,
                                    Variant variant, double alpha) {
  return make_solution(geom, data, ControlKind::temperature, variant, alpha);
}

ControlSolution optimal_simultaneous(const Geometry& geom, const ProblemData& data,
                                     Variant variant, double alpha) {
  return make_solution(geom, data, ControlKind::simultaneous, variant, alpha);
}

ControlSolution optimal_control(const Geometry& geom, const ProblemData& data,
                                ControlKind kind, Variant variant, double alpha) {
  return make_solution(geom, data, kind, variant, alpha);
}

double evaluate_cost(const Geometry& geom, const ProblemData& data, ControlKind kind,
                     double v0, double v1, Variant variant, double alpha) {
  const ProblemData sub = with_control(data, kind, v0, v1);
  return half_squared_misfit(geom, sub, variant, alpha) +
         regularization(geom, data, kind, v0, v1);
}

} // namespace ellbench
