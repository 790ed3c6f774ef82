#include <ellbench/closed_form.hpp>

#include <algorithm>
#include <cmath>

namespace ellbench {

Profile::Profile(Domain d, FieldKind f, Variant v, double alpha, double lo, double hi,
                 std::function<double(double)> value, std::function<double(double)> deriv,
                 std::vector<std::pair<std::string, double>> constants)
    : domain_(d), field_(f), variant_(v), alpha_(alpha), lo_(lo), hi_(hi),
      value_(std::move(value)), deriv_(std::move(deriv)),
      constants_(std::move(constants)) {}

namespace {

// ----- rectangle, x in [0, x0] -----

Profile rect_state(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double x0 = geom.x0(), g = dt.g, q = dt.q, b = dt.b;
  const double w = g * x0 - q;
  const double shift = var == Variant::robin ? w / al : 0.0; // u_a = u + (g x0 - q)/alpha
  auto val = [=](double x) { return -g * x * x / 2.0 + w * x + shift + b; };
  auto der = [=](double x) { return -g * x + w; };
  return Profile(Domain::rectangle, FieldKind::state, var, al, 0.0, x0, val, der, {});
}

Profile rect_adjoint(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double x0 = geom.x0(), g = dt.g, q = dt.q;
  const double d = dt.b - dt.z_d;
  const double w = g * x0 - q;
  if (var == Variant::dirichlet) {
    const double A = x0 * (g * x0 * x0 / 3.0 - q * x0 / 2.0 + d);
    auto val = [=](double x) {
      return g * x * x * x * x / 24.0 - w * x * x * x / 6.0 - d * x * x / 2.0 + A * x;
    };
    auto der = [=](double x) {
      return g * x * x * x / 6.0 - w * x * x / 2.0 - d * x + A;
    };
    return Profile(Domain::rectangle, FieldKind::adjoint, var, 0.0, 0.0, x0, val, der,
                   {{"A", A}});
  }
  const double Aa =
      x0 * (g * x0 * x0 * (1.0 / 3.0 + 1.0 / (al * x0)) -
            q * x0 * (0.5 + 1.0 / (al * x0)) + d);
  const double c2 = w / al + d; // coefficient of x^2/2
  auto val = [=](double x) {
    return g * x * x * x * x / 24.0 - w * x * x * x / 6.0 - c2 * x * x / 2.0 + Aa * x +
           Aa / al;
  };
  auto der = [=](double x) {
    return g * x * x * x / 6.0 - w * x * x / 2.0 - c2 * x + Aa;
  };
  return Profile(Domain::rectangle, FieldKind::adjoint, var, al, 0.0, x0, val, der,
                 {{"A_alpha", Aa}});
}

// ----- annulus, r in [r1, r2] -----

Profile annulus_state(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double r1 = geom.r1(), r2 = geom.r2(), g = dt.g, q = dt.q, b = dt.b;
  const double s = r2 / r1;
  const double shift =
      var == Variant::robin
          ? (g * r1 * r1 / 2.0 * (s * s - 1.0) - q * r2) / (al * r1)
          : 0.0;
  auto val = [=](double r) {
    const double lg = std::log(r / r1);
    return g * r1 * r1 / 2.0 * (s * s * lg - 0.5 * (r / r1) * (r / r1) + 0.5) -
           q * r2 * lg + shift + b;
  };
  auto der = [=](double r) { return g * (r2 * r2 - r * r) / (2.0 * r) - q * r2 / r; };
  return Profile(Domain::annulus, FieldKind::state, var, al, r1, r2, val, der, {});
}

Profile annulus_adjoint(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double r1 = geom.r1(), r2 = geom.r2(), g = dt.g, q = dt.q;
  const double d = dt.b - dt.z_d;
  const double s = r2 / r1, lr = std::log(r2 / r1);
  double d1, d2, gcorr = 0.0, qcorr = 0.0;
  std::vector<std::pair<std::string, double>> constants;
  if (var == Variant::dirichlet) {
    d1 = r2 * r2 / 2.0 *
         (g * r1 * r1 / 2.0 * (s * s * (lr - 0.75) + 0.5) - q * r2 * (lr - 0.5) + d);
    d2 = r1 * r1 / 4.0 * (g * r1 * r1 / 2.0 * (0.375 - s * s) + q * r2 + d);
    constants = {{"D1", d1}, {"D2", d2}};
  } else {
    const double ia = 1.0 / (al * r1);
    d1 = r2 * r2 / 2.0 *
         (g * r1 * r1 / 2.0 * (s * s * (lr - 0.75 + ia) + 0.5 - ia) -
          q * r2 * (lr - 0.5 + ia) + d);
    d2 = r1 * r1 / 4.0 *
             (g * r1 * r1 / 2.0 *
                  (0.375 - s * s * (1.0 + r1 / (al * r2 * r2) - 2.0 * ia + 2.0 * ia * ia) +
                   2.0 * ia * ia - 0.5 * ia) +
              q * r2 * (1.0 - 2.0 * ia + 2.0 * ia * ia) + d * (1.0 - 2.0 * ia)) +
         d1 * ia;
    gcorr = -r1 / (al * r2 * r2) + ia; // extra terms inside the g bracket
    qcorr = ia;
    constants = {{"D1_alpha", d1}, {"D2_alpha", d2}};
  }
  auto phi = [=](double r) {
    const double lg = std::log(r / r1);
    return (r / r1) * (r / r1) / 8.0 - 0.5 - s * s * (lg - 1.0 + gcorr);
  };
  auto val = [=](double r) {
    const double lg = std::log(r / r1);
    return g * r1 * r1 * r * r / 8.0 * phi(r) + q * r2 * r * r / 4.0 * (lg - 1.0 + qcorr) -
           d * r * r / 4.0 + d1 * lg + d2;
  };
  auto der = [=](double r) {
    const double lg = std::log(r / r1);
    return g * r1 * r1 / 8.0 *
               (2.0 * r * phi(r) + r * r * r / (4.0 * r1 * r1) - s * s * r) +
           q * r2 / 4.0 * (2.0 * r * (lg - 1.0 + qcorr) + r) - d * r / 2.0 + d1 / r;
  };
  return Profile(Domain::annulus, FieldKind::adjoint, var, al, r1, r2, val, der,
                 std::move(constants));
}

// ----- spherical shell, r in [r1, r2] -----

Profile shell_state(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double r1 = geom.r1(), r2 = geom.r2(), g = dt.g, q = dt.q, b = dt.b;
  const double s = r2 / r1;
  const double shift =
      var == Variant::robin
          ? (g * r1 * r1 / 3.0 * (s * s * s - 1.0) - q * r2 * r2 / r1) / (al * r1)
          : 0.0;
  auto val = [=](double r) {
    return g * r1 * r1 / 3.0 *
               (0.5 - 0.5 * (r / r1) * (r / r1) + s * s * s - (r2 / r) * s * s) +
           q * r2 * r2 / r1 * (r1 / r - 1.0) + shift + b;
  };
  auto der = [=](double r) {
    return g * (r2 * r2 * r2 - r * r * r) / (3.0 * r * r) - q * r2 * r2 / (r * r);
  };
  return Profile(Domain::shell, FieldKind::state, var, al, r1, r2, val, der, {});
}

Profile shell_adjoint(const Geometry& geom, const ProblemData& dt, Variant var, double al) {
  const double r1 = geom.r1(), r2 = geom.r2(), g = dt.g, q = dt.q;
  const double d = dt.b - dt.z_d;
  const double s = r2 / r1;
  double f1, f2, scub = s * s * s / 3.0, ccorr = -1.0 / 6.0, qslope = 0.0;
  std::vector<std::pair<std::string, double>> constants;
  if (var == Variant::dirichlet) {
    f1 = g * r1 * r1 * r2 * r2 * r2 *
             (-s * s * s / 9.0 + s * s / 5.0 - 1.0 / 18.0) +
         q * r2 * r2 * r2 * r2 * (s / 3.0 - 0.5) - r2 * r2 * r2 / 3.0 * d;
    f2 = g * r1 * r1 * r1 * r1 / 9.0 * (7.0 / 40.0 - s * s * s) +
         q * r1 * r2 * r2 / 3.0 + r1 * r1 / 6.0 * d - f1 / r1;
    constants = {{"F1", f1}, {"F2", f2}};
  } else {
    const double ia = 1.0 / (al * r1);
    f1 = g * r1 * r1 * r2 * r2 * r2 *
             (-s * s * s / 9.0 * (1.0 + ia) + s * s / 5.0 -
              (1.0 - 2.0 * ia) / 18.0) +
         q * r2 * r2 * r2 * r2 * (s / 3.0 * (1.0 + ia) - 0.5) - r2 * r2 * r2 / 3.0 * d;
    f2 = g * r1 * r1 * r1 * r1 / 9.0 *
             (7.0 / 40.0 - 0.7 * ia + ia * ia - s * s * s * (1.0 - ia + ia * ia)) +
         q * r1 * r2 * r2 / 3.0 * (1.0 - ia + ia * ia) +
         r1 * r1 / 6.0 * d * (1.0 - 2.0 * ia) - f1 / r1 * (1.0 + ia);
    scub = s * s * s / 3.0 * (1.0 + ia);
    ccorr = -1.0 / 6.0 + ia / 3.0;
    qslope = 1.0 / (3.0 * al * r1 * r1); // extra r/(3 alpha r1^2) in the q bracket
    constants = {{"F1_alpha", f1}, {"F2_alpha", f2}};
  }
  auto psi = [=](double r) {
    return (r / r1) * (r / r1) / 20.0 + (r2 / r) * s * s - scub + ccorr;
  };
  auto val = [=](double r) {
    return g * r1 * r1 * r * r / 6.0 * psi(r) +
           q * r2 * r2 * r / 2.0 * (r / (3.0 * r1) - 1.0 + qslope * r) -
           r * r / 6.0 * d + f1 / r + f2;
  };
  auto der = [=](double r) {
    const double psip = r / (10.0 * r1 * r1) - r2 * s * s / (r * r);
    return g * r1 * r1 / 6.0 * (2.0 * r * psi(r) + r * r * psip) +
           q * r2 * r2 / 2.0 * (2.0 * r / (3.0 * r1) - 1.0 + 2.0 * qslope * r) -
           r / 3.0 * d - f1 / (r * r);
  };
  return Profile(Domain::shell, FieldKind::adjoint, var, al, r1, r2, val, der,
                 std::move(constants));
}

Profile build(const Geometry& geom, const ProblemData& dt, FieldKind field, Variant var,
              double al) {
  validate(dt);
  if (var == Variant::robin) checked_alpha(al);
  switch (geom.domain()) {
    case Domain::rectangle:
      return field == FieldKind::state ? rect_state(geom, dt, var, al)
                                       : rect_adjoint(geom, dt, var, al);
    case Domain::annulus:
      return field == FieldKind::state ? annulus_state(geom, dt, var, al)
                                       : annulus_adjoint(geom, dt, var, al);
    case Domain::shell:
      return field == FieldKind::state ? shell_state(geom, dt, var, al)
                                       : shell_adjoint(geom, dt, var, al);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

} // namespace

Profile state_dirichlet(const Geometry& geom, const ProblemData& data) {
  return build(geom, data, FieldKind::state, Variant::dirichlet, 0.0);
}

Profile adjoint_dirichlet(const Geometry& geom, const ProblemData& data) {
  return build(geom, data, FieldKind::adjoint, Variant::dirichlet, 0.0);
}

Profile state_robin(const Geometry& geom, const ProblemData& data, double alpha) {
  return build(geom, data, FieldKind::state, Variant::robin, alpha);
}

Profile adjoint_robin(const Geometry& geom, const ProblemData& data, double alpha) {
  return build(geom, data, FieldKind::adjoint, Variant::robin, alpha);
}

BoundaryResiduals boundary_residuals(const Profile& profile, const Geometry& geom,
                                     const ProblemData& data, int n) {
  if (n < 8) throw Error(Errc::invalid_argument, "residual grid needs n >= 8");
  const double lo = profile.lower(), hi = profile.upper();
  const bool adjoint = profile.field() == FieldKind::adjoint;

  // Magnitude of the field across the interval; boundary values can be
  // heavily cancelling sums, so rounding floors scale with this, not with the
  // (possibly tiny) boundary value itself.
  double vmax = 0.0;
  for (int i = 0; i <= 4; ++i)
    vmax = std::max(vmax, std::abs(profile.value(lo + (hi - lo) * i / 4.0)));

  // Gamma1 at the lower end; outward normal points in -coordinate direction,
  // so -dv/dn = v'(lo).
  double g1, s1;
  const double datum = adjoint ? 0.0 : data.b;
  if (profile.variant() == Variant::dirichlet) {
    g1 = profile.value(lo) - datum;
    s1 = 1.0 + vmax + std::abs(datum);
  } else {
    const double target = profile.alpha() * (profile.value(lo) - datum);
    g1 = profile.derivative(lo) - target;
    s1 = 1.0 + std::abs(profile.derivative(lo)) +
         profile.alpha() * (vmax + std::abs(datum));
  }

  // Gamma2 at the upper end; -dv/dn = -v'(hi) = q for states, 0 for adjoints.
  const double flux = adjoint ? 0.0 : data.q;
  const double g2 = adjoint ? profile.derivative(hi)
                            : -profile.derivative(hi) - data.q;
  const double s2 = 1.0 + vmax + std::abs(profile.derivative(hi)) + std::abs(flux);

  // Interior residual of -(1/w)(w v')' = f with the conservative stencil.
  const Profile* src_state = nullptr;
  Profile u_for_adjoint =
      adjoint ? (profile.variant() == Variant::dirichlet
                     ? state_dirichlet(geom, data)
                     : state_robin(geom, data, profile.alpha()))
              : state_dirichlet(geom, data); // unused for states
  if (adjoint) src_state = &u_for_adjoint;

  const double h = (hi - lo) / n;
  double worst = 0.0;
  for (int i = 1; i < n; ++i) {
    const double c = lo + i * h;
    const double wm = geom.flux_weight(c - 0.5 * h);
    const double wp = geom.flux_weight(c + 0.5 * h);
    const double lap = (wp * (profile.value(c + h) - profile.value(c)) -
                        wm * (profile.value(c) - profile.value(c - h))) /
                       (h * h * geom.flux_weight(c));
    const double f = adjoint ? src_state->value(c) - data.z_d : data.g;
    worst = std::max(worst, std::abs(-lap - f));
  }
  return {g1, g2, worst, s1, s2};
}

} // namespace ellbench
