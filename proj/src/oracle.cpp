#include <ellbench/oracle.hpp>

#include <cmath>

namespace ellbench {

namespace {

// Thomas algorithm; diag/rhs are overwritten.
void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs,
                       std::vector<double>& out) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (diag[i - 1] == 0.0)
      throw Error(Errc::internal_inconsistency, "singular tridiagonal system");
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  if (diag[n - 1] == 0.0)
    throw Error(Errc::internal_inconsistency, "singular tridiagonal system");
  out.resize(n);
  out[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    out[i] = (rhs[i] - upper[i] * out[i + 1]) / diag[i];
}

DiscreteSolution solve_impl(const Geometry& geom, const ProblemData& data, Variant variant,
                            double alpha, FieldKind field,
                            const std::function<double(double)>& source, int n) {
  Grid1D grid = make_grid(geom, n);
  const double h = grid.h;
  const int m = n + 1;
  std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0), rhs(m, 0.0);

  auto w = [&](double c) { return geom.flux_weight(c); };
  if (w(grid.lo - 0.5 * h) <= 0.0)
    throw Error(Errc::invalid_argument, "grid too coarse for this geometry");

  for (int i = 1; i < n; ++i) {
    const double c = grid.nodes[i];
    const double wm = w(c - 0.5 * h), wp = w(c + 0.5 * h);
    lower[i] = -wm;
    diag[i] = wm + wp;
    upper[i] = -wp;
    rhs[i] = h * h * w(c) * source(c);
  }

  // Gamma1 at the lower end.
  const double bc1 = field == FieldKind::state ? data.b : 0.0;
  if (variant == Variant::dirichlet) {
    diag[0] = 1.0;
    upper[0] = 0.0;
    rhs[0] = bc1;
  } else {
    // Ghost node from the Robin condition v'(lo) = alpha (v0 - bc1).
    const double wm = w(grid.lo - 0.5 * h), wp = w(grid.lo + 0.5 * h);
    diag[0] = wm + wp + 2.0 * h * alpha * wm;
    upper[0] = -(wm + wp);
    rhs[0] = h * h * w(grid.lo) * source(grid.lo) + 2.0 * h * alpha * wm * bc1;
  }

  // Gamma2 at the upper end: v'(hi) = -q for states, 0 for adjoints.
  {
    const double flux = field == FieldKind::state ? data.q : 0.0;
    const double wm = w(grid.hi - 0.5 * h), wp = w(grid.hi + 0.5 * h);
    lower[n] = -(wm + wp);
    diag[n] = wm + wp;
    rhs[n] = h * h * w(grid.hi) * source(grid.hi) - 2.0 * h * flux * wp;
  }

  DiscreteSolution sol;
  sol.grid = std::move(grid);
  solve_tridiagonal(lower, diag, upper, rhs, sol.values);
  return sol;
}

} // namespace

Grid1D make_grid(const Geometry& geom, int n) {
  if (n < 8 || n % 2 != 0)
    throw Error(Errc::invalid_argument, "grid requires n >= 8 and even");
  Grid1D g;
  g.domain = geom.domain();
  g.n = n;
  g.lo = geom.lower();
  g.hi = geom.upper();
  g.h = (g.hi - g.lo) / n;
  g.nodes.resize(n + 1);
  for (int i = 0; i <= n; ++i) g.nodes[i] = g.lo + i * g.h;
  g.nodes[n] = g.hi;
  return g;
}

DiscreteSolution solve_bvp(const Geometry& geom, const ProblemData& data, Variant variant,
                           double alpha, FieldKind field, int n) {
  validate(data);
  if (variant == Variant::robin) checked_alpha(alpha);
  if (field == FieldKind::state) {
    auto src = [&](double) { return data.g; };
    return solve_impl(geom, data, variant, alpha, field, src, n);
  }
  const Profile u = variant == Variant::dirichlet ? state_dirichlet(geom, data)
                                                  : state_robin(geom, data, alpha);
  auto src = [&](double c) { return u.value(c) - data.z_d; };
  return solve_impl(geom, data, variant, alpha, field, src, n);
}

DiscreteSolution solve_bvp_chained(const Geometry& geom, const ProblemData& data,
                                   Variant variant, double alpha, int n) {
  const DiscreteSolution state =
      solve_bvp(geom, data, variant, alpha, FieldKind::state, n);
  auto src = [&](double c) {
    const double t = (c - state.grid.lo) / state.grid.h;
    const int i = std::min(static_cast<int>(t + 0.5), state.grid.n);
    return state.values[i] - data.z_d; // nodes coincide, nearest lookup is exact
  };
  return solve_impl(geom, data, variant, alpha, FieldKind::adjoint, src, n);
}

double weighted_l2(const Geometry& geom, const std::function<double(double)>& f, int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(Errc::invalid_argument, "Simpson rule requires even n >= 2");
  const double lo = geom.lower(), hi = geom.upper();
  const double h = (hi - lo) / n;
  auto term = [&](double c) {
    const double v = f(c);
    return v * v * geom.volume_weight(c);
  };
  double sum = term(lo) + term(hi);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * term(lo + i * h);
  return sum * h / 3.0;
}

double weighted_l2_auto(const Geometry& geom, const std::function<double(double)>& f,
                        double rel_tol) {
  int n = 64;
  double prev = weighted_l2(geom, f, n);
  while (n < (1 << 15)) {
    n *= 2;
    const double next = weighted_l2(geom, f, n);
    if (std::abs(next - prev) <= rel_tol * std::max(std::abs(next), 1e-300)) return next;
    prev = next;
  }
  return prev;
}

ScalarMinimum minimize_scalar_quadratic(const std::function<double(double)>& j,
                                        double scale) {
  if (!(scale > 0.0)) throw Error(Errc::invalid_argument, "probe scale must be positive");
  const double s = scale;
  const double c = j(0.0), jp = j(s), jm = j(-s);
  const double a = (jp + jm - 2.0 * c) / (2.0 * s * s);
  const double b = (jp - jm) / (2.0 * s);
  const double check = j(2.0 * s);
  const double predicted = 4.0 * a * s * s + 2.0 * b * s + c;
  if (std::abs(check - predicted) > 1e-9 * (1.0 + std::abs(check)))
    throw Error(Errc::invalid_argument, "evaluator is not quadratic");
  if (a <= 0.0)
    throw Error(Errc::invalid_argument, "evaluator is not strictly convex");
  const double argmin = -b / (2.0 * a);
  return {argmin, c - b * b / (4.0 * a)};
}

PairMinimum minimize_pair_quadratic(const std::function<double(double, double)>& j,
                                    double scale) {
  if (!(scale > 0.0)) throw Error(Errc::invalid_argument, "probe scale must be positive");
  const double s = scale;
  const double c = j(0.0, 0.0);
  const double jp = j(s, 0.0), jm = j(-s, 0.0);
  const double kp = j(0.0, s), km = j(0.0, -s);
  const double jc = j(s, s);
  const double agg = (jp + jm - 2.0 * c) / (2.0 * s * s);
  const double bg = (jp - jm) / (2.0 * s);
  const double aqq = (kp + km - 2.0 * c) / (2.0 * s * s);
  const double bq = (kp - km) / (2.0 * s);
  const double agq = (jc - agg * s * s - aqq * s * s - bg * s - bq * s - c) / (s * s);
  const double det = 4.0 * agg * aqq - agq * agq;
  if (agg <= 0.0 || det <= 0.0)
    throw Error(Errc::invalid_argument, "pair evaluator has an indefinite quadratic part");
  const double gmin = (-2.0 * aqq * bg + agq * bq) / det;
  const double qmin = (-2.0 * agg * bq + agq * bg) / det;
  const double value = c + bg * gmin + bq * qmin + agg * gmin * gmin +
                       aqq * qmin * qmin + agq * gmin * qmin;
  return {gmin, qmin, value};
}

} // namespace ellbench
