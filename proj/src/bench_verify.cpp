#include <ellbench/bench.hpp>

#include <algorithm>
#include <cmath>

#include <ellbench/closed_form.hpp>
#include <ellbench/oracle.hpp>

namespace ellbench {

namespace {

// Pinned from the acceptance contract, not user-tunable.
constexpr double kCoeffQuadratureTol = 1e-9;
constexpr double kExactIdentityTol = 1e-12;
constexpr double kQuadratureIdentityTol = 1e-6;
constexpr double kSlopeLo = -1.05, kSlopeHi = -0.95;

double rel_to(double abs_gap, double scale) {
  return abs_gap / std::max(std::abs(scale), 1e-300);
}

struct RowSink {
  std::vector<ReportRow>& rows;
  std::string domain;

  void add(const std::string& problem, const std::string& variant,
           const std::string& quantity, double reference, double oracle, double tol,
           double rel_scale = 0.0) {
    ReportRow row;
    row.domain = domain;
    row.problem = problem;
    row.variant = variant;
    row.quantity = quantity;
    row.reference = reference;
    row.oracle = oracle;
    row.abs_gap = std::abs(reference - oracle);
    const double scale =
        rel_scale != 0.0 ? rel_scale : std::max(std::abs(reference), std::abs(oracle));
    row.rel_gap = rel_to(row.abs_gap, std::max(scale, 1.0e-300));
    if (row.abs_gap == 0.0 && reference == oracle)
      row.verdict = reference == 0.0 ? "exact" : "pass";
    else
      row.verdict = row.rel_gap <= tol ? "pass" : "fail";
    rows.push_back(row);
  }

  void add_band(const std::string& problem, const std::string& variant,
                const std::string& quantity, double value, double lo, double hi) {
    ReportRow row;
    row.domain = domain;
    row.problem = problem;
    row.variant = variant;
    row.quantity = quantity;
    row.reference = 0.5 * (lo + hi);
    row.oracle = value;
    row.abs_gap = std::abs(value - row.reference);
    row.rel_gap = rel_to(row.abs_gap, row.reference);
    row.verdict = (value >= lo && value <= hi) ? "pass" : "fail";
    rows.push_back(row);
  }

  void add_exact(const std::string& problem, const std::string& variant,
                 const std::string& quantity) {
    rows.push_back({domain, problem, variant, quantity, 0.0, 0.0, 0.0, 0.0, "exact"});
  }
};

double profile_scale(const Profile& p) {
  return 1.0 + std::max(std::max(std::abs(p.value(p.lower())), std::abs(p.value(p.upper()))),
                        std::max(std::abs(p.derivative(p.lower())),
                                 std::abs(p.derivative(p.upper()))));
}

Profile make_profile(const Geometry& geom, const ProblemData& data, FieldKind field,
                     Variant variant, double alpha) {
  if (field == FieldKind::state)
    return variant == Variant::dirichlet ? state_dirichlet(geom, data)
                                         : state_robin(geom, data, alpha);
  return variant == Variant::dirichlet ? adjoint_dirichlet(geom, data)
                                       : adjoint_robin(geom, data, alpha);
}

void residual_rows(RowSink& sink, const BenchConfig& cfg, Variant variant, double alpha) {
  const std::string var =
      variant == Variant::dirichlet ? "dirichlet" : "robin@" + format17(alpha);
  for (FieldKind field : {FieldKind::state, FieldKind::adjoint}) {
    const Profile p = make_profile(cfg.geometry, cfg.data, field, variant, alpha);
    const char* name = field == FieldKind::state ? "state" : "adjoint";
    const double scale = profile_scale(p);
    const BoundaryResiduals res = boundary_residuals(p, cfg.geometry, cfg.data, cfg.grid_n);
    sink.add(name, var, "res_gamma1", 0.0, res.gamma1 / res.gamma1_scale,
             kExactIdentityTol, 1.0);
    sink.add(name, var, "res_gamma2", 0.0, res.gamma2 / res.gamma2_scale,
             kExactIdentityTol, 1.0);

    // Refinement of the discrete PDE residual; quadratic-exact profiles hit
    // the rounding floor and classify as exact instead of a ratio.
    const int n1 = 128, n2 = 256;
    const BoundaryResiduals r1 = boundary_residuals(p, cfg.geometry, cfg.data, n1);
    const BoundaryResiduals r2 = boundary_residuals(p, cfg.geometry, cfg.data, n2);
    const double h1 = cfg.geometry.span() / n1, h2 = cfg.geometry.span() / n2;
    const double floor1 = 64.0 * 2.2e-16 * scale / (h1 * h1);
    const double floor2 = 64.0 * 2.2e-16 * scale / (h2 * h2);
    if (r1.pde_max < floor1 && r2.pde_max < floor2)
      sink.add_exact(name, var, "pde_residual_ratio");
    else
      sink.add_band(name, var, "pde_residual_ratio", r1.pde_max / r2.pde_max,
                    cfg.tol.ratio_lo, cfg.tol.ratio_hi);
  }
}

void fd_rows(RowSink& sink, const BenchConfig& cfg, Variant variant, double alpha) {
  const std::string var =
      variant == Variant::dirichlet ? "dirichlet" : "robin@" + format17(alpha);
  for (FieldKind field : {FieldKind::state, FieldKind::adjoint}) {
    const Profile exact = make_profile(cfg.geometry, cfg.data, field, variant, alpha);
    const char* name = field == FieldKind::state ? "state" : "adjoint";
    auto max_err = [&](int n) {
      const DiscreteSolution sol = solve_bvp(cfg.geometry, cfg.data, variant, alpha, field, n);
      double worst = 0.0;
      for (int i = 0; i <= sol.grid.n; ++i)
        worst = std::max(worst, std::abs(sol.values[i] - exact.value(sol.grid.nodes[i])));
      return worst;
    };
    const double e1 = max_err(64), e2 = max_err(128);
    const double scale = profile_scale(exact);
    if (e1 < 1e-11 * scale && e2 < 1e-11 * scale)
      sink.add_exact(name, var, "fd_error_ratio");
    else
      sink.add_band(name, var, "fd_error_ratio", e1 / e2, cfg.tol.ratio_lo, cfg.tol.ratio_hi);
  }
}

void coefficient_rows(RowSink& sink, const BenchConfig& cfg, double alpha) {
  for (Variant variant : {Variant::dirichlet, Variant::robin}) {
    const std::string var =
        variant == Variant::dirichlet ? "dirichlet" : "robin@" + format17(alpha);
    const Profile u = make_profile(cfg.geometry, cfg.data, FieldKind::state, variant, alpha);
    const double table = half_squared_misfit(cfg.geometry, cfg.data, variant, alpha);
    const double quad = 0.5 * weighted_l2_auto(
                                  cfg.geometry,
                                  [&](double c) { return u.value(c) - cfg.data.z_d; });
    sink.add("misfit", var, "coeff_vs_quadrature", table, quad, kCoeffQuadratureTol);
  }
  // k3 is alpha-independent: exact equality at every alpha of the grid.
  const double k3 = dirichlet_coefficients(cfg.geometry).k[2];
  bool k3_ok = true;
  for (double a : geometric_grid(cfg.alphas.start, cfg.alphas.stop, cfg.alphas.points))
    k3_ok = k3_ok && robin_coefficients(cfg.geometry, a).k[2] == k3;
  sink.rows.push_back({sink.domain, "misfit", "robin", "k3_alpha_equals_k3", k3, k3, 0.0,
                       0.0, k3_ok ? "exact" : "fail"});
}

void optimal_rows(RowSink& sink, const BenchConfig& cfg, Variant variant, double alpha) {
  const std::string var =
      variant == Variant::dirichlet ? "dirichlet" : "robin@" + format17(alpha);
  const Geometry& geom = cfg.geometry;
  const ProblemData& data = cfg.data;
  const Measures meas = domain_measures(geom);

  for (ControlKind kind : {ControlKind::distributed, ControlKind::flux,
                           ControlKind::temperature, ControlKind::simultaneous}) {
    const std::string prob = to_string(kind);
    const ControlSolution sol = optimal_control(geom, data, kind, variant, alpha);

    const double scale =
        std::max(1.0, std::max(std::abs(sol.control[0]), std::abs(sol.control[1])));
    if (kind == ControlKind::simultaneous) {
      const PairMinimum oracle = minimize_pair_quadratic(
          [&](double vg, double vq) {
            return evaluate_cost(geom, data, kind, vg, vq, variant, alpha);
          },
          scale);
      sink.add(prob, var, "control_g_vs_oracle", sol.control[0], oracle.g, cfg.tol.oracle,
               scale);
      sink.add(prob, var, "control_q_vs_oracle", sol.control[1], oracle.q, cfg.tol.oracle,
               scale);
    } else {
      const ScalarMinimum oracle = minimize_scalar_quadratic(
          [&](double v) { return evaluate_cost(geom, data, kind, v, 0.0, variant, alpha); },
          scale);
      sink.add(prob, var, "control_vs_oracle", sol.control[0], oracle.argmin,
               cfg.tol.oracle, scale);
    }

    const double at_opt =
        evaluate_cost(geom, data, kind, sol.control[0], sol.control[1], variant, alpha);
    sink.add(prob, var, "value_vs_evaluate_cost", sol.cost, at_opt, cfg.tol.self,
             1.0 + std::abs(sol.cost));

    // First-order optimality by central differences.
    const double step = 1e-5 * scale;
    double grad = 0.0;
    if (kind == ControlKind::simultaneous) {
      const double dg = (evaluate_cost(geom, data, kind, sol.control[0] + step,
                                       sol.control[1], variant, alpha) -
                         evaluate_cost(geom, data, kind, sol.control[0] - step,
                                       sol.control[1], variant, alpha)) /
                        (2.0 * step);
      const double dq = (evaluate_cost(geom, data, kind, sol.control[0],
                                       sol.control[1] + step, variant, alpha) -
                         evaluate_cost(geom, data, kind, sol.control[0],
                                       sol.control[1] - step, variant, alpha)) /
                        (2.0 * step);
      grad = std::hypot(dg, dq);
    } else {
      grad = (evaluate_cost(geom, data, kind, sol.control[0] + step, 0.0, variant, alpha) -
              evaluate_cost(geom, data, kind, sol.control[0] - step, 0.0, variant, alpha)) /
             (2.0 * step);
    }
    sink.add(prob, var, "gradient_at_optimum", 0.0, grad / (1.0 + std::abs(sol.cost)),
             1e-6, 1.0);
    (void)meas;
  }
}

void state_gap_rows(RowSink& sink, const BenchConfig& cfg) {
  const LimitConstant k = state_gap_constant(cfg.geometry, cfg.data);
  for (double alpha : {10.0, 1e4}) {
    const double closed = alpha * state_gap_norm(cfg.geometry, cfg.data, alpha);
    sink.add("state_gap", "robin@" + format17(alpha), "alpha_gap_closed_vs_" + k.name,
             k.value, closed, kExactIdentityTol, std::max(k.value, 1e-300));
    const Profile u = state_dirichlet(cfg.geometry, cfg.data);
    const Profile ua = state_robin(cfg.geometry, cfg.data, alpha);
    const double quad = alpha * std::sqrt(weighted_l2(
                                    cfg.geometry,
                                    [&](double c) { return ua.value(c) - u.value(c); }, 1024));
    sink.add("state_gap", "robin@" + format17(alpha), "alpha_gap_quadrature_vs_" + k.name,
             k.value, quad, kQuadratureIdentityTol, std::max(k.value, 1e-300));
  }
}

void sweep_rows(RowSink& sink, const BenchConfig& cfg) {
  const std::vector<double> alphas =
      geometric_grid(cfg.alphas.start, cfg.alphas.stop, cfg.alphas.points);
  const GapQuantity quantities[] = {
      GapQuantity::state_l2,  GapQuantity::adjoint_l2, GapQuantity::ctrl_g,
      GapQuantity::ctrl_q,    GapQuantity::ctrl_b,     GapQuantity::ctrl_gq_g,
      GapQuantity::ctrl_gq_q, GapQuantity::cost_j1,    GapQuantity::cost_j2,
      GapQuantity::cost_j3,   GapQuantity::cost_j4};
  for (GapQuantity qty : quantities) {
    const auto records = alpha_sweep(cfg.geometry, cfg.data, qty, alphas);
    const RateFit fit = fit_order(records);
    const LimitConstant limit = closed_form_limit(cfg.geometry, cfg.data, qty);
    const std::string qname = to_string(qty);
    if (fit.exact_zero) {
      // Zero gap everywhere; the tabulated limit must be zero as well.
      sink.add("sweep", "robin", "limit:" + limit.name, limit.value, 0.0, cfg.tol.limit,
               1.0);
      sink.rows.back().verdict = limit.value == 0.0 ? "exact" : "fail";
      continue;
    }
    sink.add_band("sweep", "robin", "slope:" + qname, fit.slope, kSlopeLo, kSlopeHi);
    ReportRow row;
    row.domain = sink.domain;
    row.problem = "sweep";
    row.variant = "robin";
    row.quantity = "limit:" + limit.name;
    row.reference = limit.value;
    row.oracle = fit.extrapolated;
    row.abs_gap = std::abs(limit.value - fit.extrapolated);
    row.rel_gap = rel_to(row.abs_gap, std::max(std::abs(limit.value),
                                               std::abs(fit.extrapolated)));
    if (row.rel_gap <= cfg.tol.limit) {
      row.verdict = "pass";
    } else {
      // Formula-audit failure: name the tabulated expression alongside both values.
      row.verdict = "fail";
      row.quantity = "formula_audit:" + limit.name + " [" + limit.formula + "]";
    }
    sink.rows.push_back(row);
  }
}

} // namespace

std::vector<ReportRow> run_verification(const BenchConfig& config) {
  validate(config.data);
  std::vector<ReportRow> rows;
  RowSink sink{rows, to_string(config.geometry.domain())};

  const double alpha_mid = std::sqrt(config.alphas.start * config.alphas.stop);
  residual_rows(sink, config, Variant::dirichlet, 0.0);
  residual_rows(sink, config, Variant::robin, 10.0);
  residual_rows(sink, config, Variant::robin, 1e4);
  fd_rows(sink, config, Variant::dirichlet, 0.0);
  fd_rows(sink, config, Variant::robin, 100.0);
  coefficient_rows(sink, config, 50.0);
  optimal_rows(sink, config, Variant::dirichlet, 0.0);
  optimal_rows(sink, config, Variant::robin, alpha_mid);
  state_gap_rows(sink, config);
  sweep_rows(sink, config);
  return rows;
}

bool all_rows_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return r.verdict == "pass" || r.verdict == "exact" || r.verdict == "skipped";
  });
}

} // namespace ellbench
