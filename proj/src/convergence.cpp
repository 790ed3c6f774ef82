#include <ellbench/convergence.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include <ellbench/closed_form.hpp>
#include <ellbench/coefficients.hpp>
#include <ellbench/optimal_control.hpp>
#include <ellbench/oracle.hpp>

namespace ellbench {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

// Spatially constant pointwise difference u_alpha - u, assembled term by term
// so no cancellation enters before the division by alpha.
double state_difference(const Geometry& geom, const ProblemData& dt, double alpha) {
  switch (geom.domain()) {
    case Domain::rectangle:
      return (dt.g * geom.x0() - dt.q) / alpha;
    case Domain::annulus: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return (dt.g * (r2 * r2 - r1 * r1) / 2.0 - dt.q * r2) / (alpha * r1);
    }
    case Domain::shell: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return (dt.g * (cube(r2) - cube(r1)) / 3.0 - dt.q * r2 * r2) / (alpha * r1 * r1);
    }
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

struct ScalarQuantity {
  ControlKind kind;
  bool cost;     // control component otherwise
  int component; // 0 or 1 (simultaneous controls)
};

bool scalar_quantity(GapQuantity q, ScalarQuantity& out) {
  switch (q) {
    case GapQuantity::ctrl_g: out = {ControlKind::distributed, false, 0}; return true;
    case GapQuantity::ctrl_q: out = {ControlKind::flux, false, 0}; return true;
    case GapQuantity::ctrl_b: out = {ControlKind::temperature, false, 0}; return true;
    case GapQuantity::ctrl_gq_g: out = {ControlKind::simultaneous, false, 0}; return true;
    case GapQuantity::ctrl_gq_q: out = {ControlKind::simultaneous, false, 1}; return true;
    case GapQuantity::cost_j1: out = {ControlKind::distributed, true, 0}; return true;
    case GapQuantity::cost_j2: out = {ControlKind::flux, true, 0}; return true;
    case GapQuantity::cost_j3: out = {ControlKind::temperature, true, 0}; return true;
    case GapQuantity::cost_j4: out = {ControlKind::simultaneous, true, 0}; return true;
    default: return false;
  }
}

int coeff_index(GapQuantity q) {
  switch (q) {
    case GapQuantity::coeff_k1: return 0;
    case GapQuantity::coeff_k2: return 1;
    case GapQuantity::coeff_k3: return 2;
    case GapQuantity::coeff_k4: return 3;
    case GapQuantity::coeff_k5: return 4;
    case GapQuantity::coeff_k6: return 5;
    default: return -1;
  }
}

} // namespace

const char* to_string(GapQuantity s) {
  switch (s) {
    case GapQuantity::state_l2: return "state_l2";
    case GapQuantity::adjoint_l2: return "adjoint_l2";
    case GapQuantity::ctrl_g: return "ctrl_g";
    case GapQuantity::ctrl_q: return "ctrl_q";
    case GapQuantity::ctrl_b: return "ctrl_b";
    case GapQuantity::ctrl_gq_g: return "ctrl_gq_g";
    case GapQuantity::ctrl_gq_q: return "ctrl_gq_q";
    case GapQuantity::cost_j1: return "cost_J1";
    case GapQuantity::cost_j2: return "cost_J2";
    case GapQuantity::cost_j3: return "cost_J3";
    case GapQuantity::cost_j4: return "cost_J4";
    case GapQuantity::coeff_k1: return "coeff_k1";
    case GapQuantity::coeff_k2: return "coeff_k2";
    case GapQuantity::coeff_k3: return "coeff_k3";
    case GapQuantity::coeff_k4: return "coeff_k4";
    case GapQuantity::coeff_k5: return "coeff_k5";
    case GapQuantity::coeff_k6: return "coeff_k6";
  }
  return "?";
}

GapQuantity parse_quantity(const std::string& name) {
  static const GapQuantity all[] = {
      GapQuantity::state_l2,  GapQuantity::adjoint_l2, GapQuantity::ctrl_g,
      GapQuantity::ctrl_q,    GapQuantity::ctrl_b,     GapQuantity::ctrl_gq_g,
      GapQuantity::ctrl_gq_q, GapQuantity::cost_j1,    GapQuantity::cost_j2,
      GapQuantity::cost_j3,   GapQuantity::cost_j4,    GapQuantity::coeff_k1,
      GapQuantity::coeff_k2,  GapQuantity::coeff_k3,   GapQuantity::coeff_k4,
      GapQuantity::coeff_k5,  GapQuantity::coeff_k6};
  for (GapQuantity q : all)
    if (name == to_string(q)) return q;
  throw Error(Errc::invalid_argument, "unknown sweep quantity: " + name);
}

std::vector<double> geometric_grid(double start, double stop, int points) {
  if (!(start > 0.0) || !(stop > start))
    throw Error(Errc::invalid_argument, "alpha grid requires 0 < start < stop");
  if (points < 4)
    throw Error(Errc::invalid_argument, "alpha grid requires at least 4 points");
  std::vector<double> grid(points);
  const double ratio = std::log(stop / start) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = start * std::exp(i * ratio);
  grid.back() = stop;
  return grid;
}

double state_gap_norm(const Geometry& geom, const ProblemData& data, double alpha) {
  checked_alpha(alpha);
  return std::abs(state_difference(geom, data, alpha)) *
         std::sqrt(domain_measures(geom).volume);
}

std::vector<SweepRecord> alpha_sweep(const Geometry& geom, const ProblemData& data,
                                     GapQuantity quantity, std::span<const double> alphas) {
  validate(data);
  if (alphas.size() < 4)
    throw Error(Errc::invalid_argument, "alpha sweep requires at least 4 points");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    checked_alpha(alphas[i]);
    if (i > 0 && alphas[i] <= alphas[i - 1])
      throw Error(Errc::invalid_argument, "alpha grid must be strictly increasing");
  }

  std::vector<SweepRecord> records;
  records.reserve(alphas.size());

  ScalarQuantity sqty{};
  const int kidx = coeff_index(quantity);

  double dir_value = 0.0;
  std::unique_ptr<Profile> p_dir;
  if (scalar_quantity(quantity, sqty)) {
    const ControlSolution sol = optimal_control(geom, data, sqty.kind, Variant::dirichlet);
    dir_value = sqty.cost ? sol.cost : sol.control[sqty.component];
  } else if (kidx >= 0) {
    dir_value = dirichlet_coefficients(geom).k[kidx];
  } else if (quantity == GapQuantity::adjoint_l2) {
    p_dir = std::make_unique<Profile>(adjoint_dirichlet(geom, data));
  }

  for (double alpha : alphas) {
    SweepRecord rec{};
    rec.alpha = alpha;
    if (scalar_quantity(quantity, sqty)) {
      const ControlSolution sol = optimal_control(geom, data, sqty.kind, Variant::robin, alpha);
      rec.dirichlet_value = dir_value;
      rec.robin_value = sqty.cost ? sol.cost : sol.control[sqty.component];
      rec.gap = std::abs(rec.robin_value - rec.dirichlet_value);
    } else if (kidx >= 0) {
      rec.dirichlet_value = dir_value;
      rec.robin_value = robin_coefficients(geom, alpha).k[kidx];
      rec.gap = std::abs(rec.robin_value - rec.dirichlet_value);
    } else if (quantity == GapQuantity::state_l2) {
      rec.dirichlet_value = 0.0;
      rec.gap = state_gap_norm(geom, data, alpha);
      rec.robin_value = rec.gap;
    } else { // adjoint_l2 by quadrature of the pointwise difference
      const Profile p_rob = adjoint_robin(geom, data, alpha);
      auto diff = [&](double c) { return p_rob.value(c) - p_dir->value(c); };
      rec.dirichlet_value = 0.0;
      rec.gap = std::sqrt(weighted_l2(geom, diff, 1024));
      rec.robin_value = rec.gap;
    }
    rec.alpha_times_gap = rec.alpha * rec.gap;
    records.push_back(rec);
  }
  return records;
}

RateFit fit_order(std::span<const SweepRecord> records) {
  if (records.size() < 4)
    throw Error(Errc::invalid_argument, "rate fit requires at least 4 sweep points");
  RateFit fit;
  fit.points = static_cast<int>(records.size());

  bool all_zero = true, any_zero = false;
  for (const auto& r : records) {
    if (r.gap > 0.0) all_zero = false;
    else any_zero = true;
  }
  if (all_zero) {
    fit.exact_zero = true;
    return fit;
  }
  if (any_zero) { // mixed zero/nonzero gaps admit no log-log fit
    fit.degenerate = true;
    return fit;
  }

  // Least squares for log(gap) = slope * log(alpha) + intercept.
  const int n = fit.points;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : records) {
    const double lx = std::log(r.alpha), ly = std::log(r.gap);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (const auto& r : records) {
    const double ly = std::log(r.gap);
    const double pred = fit.slope * std::log(r.alpha) + fit.intercept;
    ss_res += sq(ly - pred);
    ss_tot += sq(ly - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

  // Extrapolate alpha*gap = L + c/alpha from the two largest alphas; the
  // remaining points provide a residual check of the model.
  const SweepRecord& a = records[records.size() - 2];
  const SweepRecord& bb = records[records.size() - 1];
  const double c = (a.alpha_times_gap - bb.alpha_times_gap) / (1.0 / a.alpha - 1.0 / bb.alpha);
  fit.extrapolated = bb.alpha_times_gap - c / bb.alpha;
  double worst = 0.0;
  for (std::size_t i = 0; i + 2 < records.size(); ++i) {
    const double model = fit.extrapolated + c / records[i].alpha;
    worst = std::max(worst, std::abs(records[i].alpha_times_gap - model) /
                                std::max(std::abs(fit.extrapolated), 1e-300));
  }
  fit.model_residual = worst;
  return fit;
}

// ---------------------------------------------------------------------------
// Tabulated limit constants. Each block transcribes the explicit expression
// in its source grouping; disagreements with sweeps are audit findings, not
// reasons to edit these.
// ---------------------------------------------------------------------------

LimitConstant state_gap_constant(const Geometry& geom, const ProblemData& dt) {
  validate(dt);
  const double g = dt.g, q = dt.q;
  switch (geom.domain()) {
    case Domain::rectangle: {
      const double x0 = geom.x0(), y0 = geom.y0();
      return {"K1", "sqrt(x0 y0) |q - g x0|",
              std::sqrt(x0 * y0) * std::abs(q - g * x0), true};
    }
    case Domain::annulus: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return {"K2", "sqrt(pi) sqrt(r2^2-r1^2) |2 q r2 - g (r2^2-r1^2)| / (2 r1)",
              std::sqrt(kPi) * std::sqrt(r2 * r2 - r1 * r1) *
                  std::abs(2.0 * q * r2 - g * (r2 * r2 - r1 * r1)) / (2.0 * r1),
              true};
    }
    case Domain::shell: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return {"K3", "sqrt(4 pi (r2^3-r1^3) (3 q r2^2 + g (r1^3-r2^3))^2 / (27 r1^4))",
              std::sqrt(4.0 * kPi * (cube(r2) - cube(r1)) *
                        sq(3.0 * q * r2 * r2 + g * (cube(r1) - cube(r2))) /
                        (27.0 * r1 * r1 * r1 * r1)),
              true};
    }
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

LimitConstant adjoint_gap_limit(const Geometry& geom, const ProblemData& dt) {
  validate(dt);
  const double g = dt.g, q = dt.q, b = dt.b, zd = dt.z_d, d = b - zd;
  switch (geom.domain()) {
    case Domain::rectangle: {
      const double x0 = geom.x0(), y0 = geom.y0();
      const double bracket = 180.0 * sq(b + zd) + 129.0 * q * q * x0 * x0 -
                             208.0 * g * q * cube(x0) + 84.0 * g * g * sq(x0 * x0) -
                             60.0 * d * (5.0 * q * x0 - 4.0 * g * x0 * x0);
      return {"L1",
              "sqrt(x0^3 y0 / 180 |180 (b+z_d)^2 + 129 q^2 x0^2 - 208 g q x0^3 "
              "+ 84 g^2 x0^4 - 60 (b-z_d)(5 q x0 - 4 g x0^2)|)",
              std::sqrt(cube(x0) * y0 / 180.0 * std::abs(bracket)), true};
    }
    case Domain::annulus: {
      const double r1 = geom.r1(), r2 = geom.r2();
      const double lr = std::log(r2 / r1);
      const double r1_2 = r1 * r1, r2_2 = r2 * r2;
      const double r1_4 = r1_2 * r1_2, r2_4 = r2_2 * r2_2;
      const double r2_3 = r2_2 * r2, r2_5 = r2_4 * r2, r2_6 = r2_4 * r2_2;
      const double dm = r1_2 - r2_2;
      const double bracket =
          dm * (192.0 * b * b * sq(dm) +
                96.0 * b * dm *
                    (g * (r1_4 - 4.0 * r1_2 * r2_2 + 3.0 * r2_4) + 3.0 * q * r1_2 * r2 -
                     5.0 * q * r2_3 - 4.0 * r1_2 * zd + 4.0 * r2_2 * zd) +
                g * g * (13.0 * r1_4 - 80.0 * r1_2 * r2_2 + 115.0 * r2_4) * sq(dm) +
                4.0 * g * dm *
                    (q * (19.0 * r1_4 * r2 - 92.0 * r1_2 * r2_3 + 97.0 * r2_5) -
                     24.0 * zd * (r1_4 - 4.0 * r1_2 * r2_2 + 3.0 * r2_4)) +
                8.0 * (q * q * (14.0 * r1_4 * r2_2 - 49.0 * r1_2 * r2_4 + 41.0 * r2_6) -
                       12.0 * q * r2 * zd * (3.0 * r1_4 - 8.0 * r1_2 * r2_2 + 5.0 * r2_4) +
                       24.0 * zd * zd * sq(dm))) +
          24.0 * r2_3 * lr *
              (16.0 * b * dm * (g * r2 * (r2_2 - r1_2) + q * (r1_2 - 2.0 * r2_2)) +
               g * g * r2 * (12.0 * r2_2 - 5.0 * r1_2) * sq(dm) +
               4.0 * g * dm *
                   (q * (r1_4 - 9.0 * r1_2 * r2_2 + 11.0 * r2_4) + 4.0 * r2 * zd * dm) +
               4.0 * q *
                   (q * (3.0 * r1_4 * r2 - 12.0 * r1_2 * r2_3 + 10.0 * r2_5) -
                    4.0 * zd * (r1_4 - 3.0 * r1_2 * r2_2 + 2.0 * r2_4))) -
          48.0 * r2_6 * lr * lr *
              (g * g * (r1_4 - 5.0 * r1_2 * r2_2 + 4.0 * r2_4) +
               4.0 * g * q * r2 * (3.0 * r1_2 - 4.0 * r2_2) -
               4.0 * q * q * (r1_2 - 4.0 * r2_2));
      return {"L2", "sqrt(pi/(768 r1^2) |...|) (adjoint gap bracket, annulus)",
              std::sqrt(kPi / (768.0 * r1_2) * std::abs(bracket)), true};
    }
    case Domain::shell: {
      const double r1 = geom.r1(), r2 = geom.r2();
      const double m = r1 * r1 + r1 * r2 + r2 * r2;
      const double dm = r1 - r2;
      const double bracket =
          6300.0 * b * b * r1 * r1 * cube(m) +
          420.0 * b * r1 * m *
              (4.0 * g *
                   (std::pow(r1, 5) + 4.0 * std::pow(r1, 4) * r2 +
                    10.0 * cube(r1) * r2 * r2 + 14.0 * r1 * r1 * cube(r2) +
                    11.0 * r1 * std::pow(r2, 4) + 5.0 * std::pow(r2, 5)) *
                   sq(dm) +
               3.0 * (q * r2 * r2 *
                          (7.0 * std::pow(r1, 4) + 14.0 * cube(r1) * r2 +
                           6.0 * r1 * r1 * r2 * r2 - 7.0 * r1 * cube(r2) -
                           20.0 * std::pow(r2, 4)) -
                      10.0 * r1 * zd * sq(m))) +
          4.0 * g * g *
              (31.0 * std::pow(r1, 8) + 217.0 * std::pow(r1, 7) * r2 +
               868.0 * std::pow(r1, 6) * r2 * r2 + 2248.0 * std::pow(r1, 5) * cube(r2) +
               4018.0 * std::pow(r1, 4) * std::pow(r2, 4) +
               5047.0 * cube(r1) * std::pow(r2, 5) +
               4336.0 * r1 * r1 * std::pow(r2, 6) + 2380.0 * r1 * std::pow(r2, 7) +
               700.0 * std::pow(r2, 8)) *
              sq(sq(dm)) -
          24.0 * g * sq(dm) *
              (q * r2 * r2 *
                   (-52.0 * std::pow(r1, 7) - 260.0 * std::pow(r1, 6) * r2 -
                    675.0 * std::pow(r1, 5) * r2 * r2 -
                    970.0 * std::pow(r1, 4) * cube(r2) -
                    440.0 * cube(r1) * std::pow(r2, 4) +
                    612.0 * r1 * r1 * std::pow(r2, 5) + 1085.0 * r1 * std::pow(r2, 6) +
                    700.0 * std::pow(r2, 7)) +
               70.0 * r1 * zd * sq(m) *
                   (cube(r1) + 3.0 * r1 * r1 * r2 + 6.0 * r1 * r2 * r2 + 5.0 * cube(r2))) +
          45.0 * (q * q * std::pow(r2, 4) * sq(dm) *
                      (71.0 * std::pow(r1, 4) + 355.0 * cube(r1) * r2 +
                       771.0 * r1 * r1 * r2 * r2 + 952.0 * r1 * cube(r2) +
                       560.0 * std::pow(r2, 4)) -
                  28.0 * q * r1 * r2 * r2 * zd *
                      (7.0 * std::pow(r1, 6) + 21.0 * std::pow(r1, 5) * r2 +
                       27.0 * std::pow(r1, 4) * r2 * r2 + 13.0 * cube(r1) * cube(r2) -
                       21.0 * r1 * r1 * std::pow(r2, 4) - 27.0 * r1 * std::pow(r2, 5) -
                       20.0 * std::pow(r2, 6)) +
                  140.0 * r1 * r1 * zd * zd * cube(m));
      return {"L3", "sqrt(pi (r2-r1)^3/(42525 r1^6) |...|) (adjoint gap bracket, shell)",
              std::sqrt(kPi * cube(r2 - r1) / (42525.0 * std::pow(r1, 6)) *
                        std::abs(bracket)),
              true};
    }
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

namespace {

LimitConstant rect_control_limit(const Geometry& geom, const ProblemData& dt,
                                 GapQuantity qty) {
  const double x0 = geom.x0();
  const double g = dt.g, q = dt.q, d = dt.b - dt.z_d;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double x3 = cube(x0), x4 = x3 * x0, x5 = x4 * x0, x7 = x5 * x0 * x0;
  switch (qty) {
    case GapQuantity::ctrl_g:
      return {"ctrl_g",
              "5 x0 |-150 M1 q x0 + 4(45 M1 - 2)(b-z_d) x0^4 + 5 q x0^5| "
              "/ (4 (15 M1 + 2 x0^4)^2)",
              5.0 * x0 *
                  std::abs(-150.0 * m1 * q * x0 + 4.0 * (45.0 * m1 - 2.0) * d * x4 +
                           5.0 * q * x5) /
                  (4.0 * sq(15.0 * m1 + 2.0 * x4)),
              true};
    case GapQuantity::ctrl_q:
      return {"ctrl_q",
              "x0 |60 g M2 x0^2 + 5 g x0^5 + 12(6 M2 - x0^3)(b-z_d)| / (8 (3 M2 + x0^3)^2)",
              x0 * std::abs(60.0 * g * m2 * x0 * x0 + 5.0 * g * x5 +
                            12.0 * (6.0 * m2 - x3) * d) /
                  (8.0 * sq(3.0 * m2 + x3)),
              true};
    case GapQuantity::ctrl_b:
      return {"ctrl_b", "x0 |q - g x0| / (M3 + x0)",
              x0 * std::abs(q - g * x0) / (m3 + x0), true};
    case GapQuantity::ctrl_gq_g:
    case GapQuantity::ctrl_gq_q: {
      const double p1 = 3.0 *
                        (2880.0 * m4 * m5 + 960.0 * m4 * x3 + 384.0 * m5 * x4 + 3.0 * x7) *
                        (320.0 * m4 * (3.0 * m5 + x3) + 128.0 * m5 * x4 + x7);
      if (qty == GapQuantity::ctrl_gq_g)
        return {"ctrl_gq_g",
                "40 x0 (b-z_d)/P1 |-207360 M4 M5^2 - 8640 M4 M5 x0^3 - 1440 M4 x0^6 "
                "+ 18432 M5^2 x0^4 + 168 M5 x0^7 + 3 x0^10|",
                40.0 * x0 * std::abs(d) / p1 *
                    std::abs(-207360.0 * m4 * m5 * m5 - 8640.0 * m4 * m5 * x3 -
                             1440.0 * m4 * x3 * x3 + 18432.0 * m5 * m5 * x4 +
                             168.0 * m5 * x7 + 3.0 * x5 * x5),
                true};
      return {"ctrl_gq_q",
              "8 x0 (b-z_d)/P1 |1036800 M4^2 M5 - 172800 M4^2 x0^3 - 227520 M4 M5 x0^4 "
              "- 7080 M4 x0^7 - 768 M5 x0^8 + 3 x0^11|",
              8.0 * x0 * std::abs(d) / p1 *
                  std::abs(1036800.0 * m4 * m4 * m5 - 172800.0 * m4 * m4 * x3 -
                           227520.0 * m4 * m5 * x4 - 7080.0 * m4 * x7 -
                           768.0 * m5 * x4 * x4 + 3.0 * x7 * x4),
              true};
    }
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a control quantity");
}

LimitConstant annulus_control_limit(const Geometry& geom, const ProblemData& dt,
                                    GapQuantity qty) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, b = dt.b, zd = dt.z_d, d = b - zd;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double lr = std::log(r2 / r1);
  const double r1_2 = r1 * r1, r2_2 = r2 * r2;
  const double r1_4 = sq(r1_2), r2_3 = r2_2 * r2, r2_4 = sq(r2_2), r2_5 = r2_4 * r2,
               r2_6 = r2_4 * r2_2, r1_6 = r1_4 * r1_2;
  const double dm = r1_2 - r2_2;
  switch (qty) {
    case GapQuantity::ctrl_g: {
      const double g2 = r1 * sq(dm * (96.0 * m1 + 2.0 * r1_4 - 13.0 * r1_2 * r2_2 +
                                      17.0 * r2_4) +
                                (36.0 * r2_6 - 24.0 * r1_2 * r2_4) * lr -
                                24.0 * r2_6 * lr * lr);
      const double inner =
          4.0 * r2_3 * (r2_2 - r1_2) * lr *
              (36.0 * r2_3 * d * dm - 96.0 * m1 * q * (r1_2 - 2.0 * r2_2) +
               q * (4.0 * r1_6 - 13.0 * r1_4 * r2_2 + 14.0 * r1_2 * r2_4 + 7.0 * r2_6)) -
          sq(dm) * (4.0 * b * dm * (-96.0 * m1 + r1_4 - 5.0 * r1_2 * r2_2 + 10.0 * r2_4) -
                    96.0 * m1 *
                        (3.0 * q * r1_2 * r2 - 5.0 * q * r2_3 - 4.0 * r1_2 * zd +
                         4.0 * r2_2 * zd) +
                    3.0 * q * r1_6 * r2 - 14.0 * q * r1_4 * r2_3 + 19.0 * q * r1_2 * r2_5 +
                    4.0 * q * r2_6 * r2 - 4.0 * r1_6 * zd + 24.0 * r1_4 * r2_2 * zd -
                    60.0 * r1_2 * r2_4 * zd + 40.0 * r2_6 * zd) -
          24.0 * r2_5 * lr * lr *
              (4.0 * r2 * d * (r1_4 - r2_4) +
               q * (2.0 * r1_6 - 7.0 * r1_4 * r2_2 + 6.0 * r1_2 * r2_4 + r2_6)) +
          96.0 * q * r1_2 * r2_6 * r2_3 * cube(lr);
      return {"ctrl_g", "12/G2 |4 r2^3 (r2^2-r1^2) log(r2/r1)[...] - ... | (annulus)",
              12.0 / g2 * std::abs(inner), true};
    }
    case GapQuantity::ctrl_q: {
      const double q2 =
          8.0 * r1 * sq(4.0 * m2 - r1_2 * r2 + 2.0 * r2_3 * lr * lr - 2.0 * r2_3 * lr + r2_3);
      const double inner =
          (r2_2 - r1_2) * (g * (-24.0 * m2 * r1_2 + 3.0 * r1_4 * r2 + 40.0 * m2 * r2_2 -
                                4.0 * r1_2 * r2_3 + r2_5) -
                           64.0 * m2 * d) +
          2.0 * r2_2 *
              (g * (-3.0 * r1_4 * r2 + 2.0 * r1_2 * r2_3 + r2_5 +
                    16.0 * m2 * (r1_2 - 2.0 * r2_2)) +
               16.0 * r2 * dm * d) *
              lr -
          4.0 * r2_3 *
              (g * (-3.0 * r1_4 + 4.0 * r1_2 * r2_2 + r2_4) - 8.0 * d * (r1_2 + r2_2)) *
              lr * lr +
          16.0 * g * r1_2 * r2_5 * cube(lr);
      return {"ctrl_q", "1/Q2 |(r2^2-r1^2)[...] + 2 r2^2 [...] log - ...| (annulus)",
              std::abs(inner) / q2, true};
    }
    case GapQuantity::ctrl_b:
      return {"ctrl_b", "|(r1^2-r2^2)(g (r1^2-r2^2) + 2 q r2) / (2 r1 (-2 M3 r1 + r1^2 - r2^2))|",
              std::abs(dm * (g * dm + 2.0 * q * r2) / (2.0 * r1 * (-2.0 * m3 * r1 + dm))),
              true};
    case GapQuantity::ctrl_gq_g:
    case GapQuantity::ctrl_gq_q: {
      const double r1_8 = sq(r1_4), r2_7 = r2_6 * r2, r2_8 = sq(r2_4);
      const double p2 =
          r1 * sq(-16.0 * r2_3 * lr * lr *
                      (-192.0 * m4 * dm + 96.0 * m5 * r2_3 - 4.0 * r1_6 + r2_6) -
                  8.0 * r2_3 * lr *
                      (384.0 * m4 * dm + 6.0 * r1_2 * (32.0 * m5 * r2 + r2_4) -
                       288.0 * m5 * r2_3 - 10.0 * r1_6 + 9.0 * r1_4 * r2_2 - 5.0 * r2_6) +
                  dm * (1536.0 * m4 * (4.0 * m5 - r1_2 * r2 + r2_3) +
                        64.0 * m5 * (2.0 * r1_4 - 13.0 * r1_2 * r2_2 + 17.0 * r2_4) -
                        5.0 * r1_6 * r2 + 51.0 * r1_4 * r2_3 - 75.0 * r1_2 * r2_5 +
                        29.0 * r2_7));
      if (qty == GapQuantity::ctrl_gq_g) {
        const double inner =
            -4.0 * r2_3 * sq(r2_2 - r1_2) * lr *
                (768.0 * m4 * (8.0 * m5 * (r1_2 + 6.0 * r2_2) - 3.0 * r1_4 * r2 + 3.0 * r2_5) +
                 18432.0 * m5 * m5 * r2_3 +
                 64.0 * m5 * (8.0 * r1_6 - 49.0 * r1_4 * r2_2 - 16.0 * r1_2 * r2_4 +
                              21.0 * r2_6) -
                 3.0 * (3.0 * r1_8 * r2 - 65.0 * r1_6 * r2_3 + 49.0 * r1_4 * r2_5 +
                        17.0 * r1_2 * r2_7 - 4.0 * r2_8 * r2)) -
            cube(dm) * (-3072.0 * m4 *
                            (64.0 * m5 * m5 - 14.0 * m5 * r1_2 * r2 - 6.0 * m5 * r2_3 +
                             r1_4 * r2_2 - r2_6) +
                        2048.0 * m5 * m5 * (r1_4 - 5.0 * r1_2 * r2_2 + 10.0 * r2_4) -
                        32.0 * m5 *
                            (5.0 * r1_6 * r2 - 25.0 * r1_4 * r2_3 + 119.0 * r1_2 * r2_5 -
                             75.0 * r2_7) +
                        r2_2 * (5.0 * r1_8 - 10.0 * r1_6 * r2_2 + 156.0 * r1_4 * r2_4 -
                                182.0 * r1_2 * r2_6 + 31.0 * r2_8)) +
            16.0 * r2_3 * dm * lr * lr *
                (192.0 * m4 *
                     (32.0 * m5 * (2.0 * r1_4 - 2.0 * r1_2 * r2_2 - r2_4) -
                      r2 * sq(dm) * (7.0 * r1_2 + r2_2)) -
                 3072.0 * m5 * m5 * r2_3 * (r1_2 + r2_2) -
                 32.0 * m5 * (4.0 * r1_8 - 12.0 * r1_6 * r2_2 - 53.0 * r1_4 * r2_4 +
                              3.0 * r1_2 * r2_6 + 4.0 * r2_8) +
                 5.0 * r1_8 * r1_2 * r2 - 81.0 * r1_8 * r2_3 + 25.0 * r1_6 * r2_5 +
                 46.0 * r1_4 * r2_7 + 6.0 * r1_2 * r2_8 * r2 - r2_8 * r2_3) -
            256.0 * r1_4 * r2_6 * sq(sq(lr)) *
                (-192.0 * m4 * dm + 96.0 * m5 * r2_3 + 2.0 * r1_6 + r2_6) -
            64.0 * r1_2 * r2_6 * cube(lr) *
                (192.0 * m4 * (r1_4 - r2_4) - r1_2 * (288.0 * m5 * r2_3 + 7.0 * r2_6) -
                 r2_5 * (96.0 * m5 + r2_3) + 16.0 * r1_8 - 8.0 * r1_6 * r2_2);
        return {"ctrl_gq_g", "96 (b-z_d)/P2 |...| (annulus pair g)",
                96.0 * std::abs(d) / p2 * std::abs(inner), true};
      }
      const double inner =
          2.0 * cube(dm) *
              (147456.0 * m4 * m4 * m5 -
               24.0 * m4 *
                   (64.0 * m5 * (5.0 * r1_4 - 13.0 * r1_2 * r2_2 + 2.0 * r2_4) -
                    3.0 * (9.0 * r1_6 * r2 - 31.0 * r1_4 * r2_3 + 7.0 * r1_2 * r2_5 +
                           15.0 * r2_7)) -
               dm * (8.0 * m5 *
                         (r1_6 - 15.0 * r1_4 * r2_2 + 3.0 * r1_2 * r2_4 + 83.0 * r2_6) +
                     6.0 * r1_6 * r2_3 - 3.0 * r1_4 * r2_5 - 48.0 * r1_2 * r2_7 +
                     9.0 * r2_8 * r2)) +
          r2_2 * sq(dm) * lr *
              (147456.0 * m4 * m4 * r2 * dm -
               384.0 * m4 * dm *
                   (48.0 * m5 * (3.0 * r1_2 - 4.0 * r2_2) - 4.0 * r1_4 * r2 +
                    35.0 * r1_2 * r2_3 + 11.0 * r2_5) +
               r2 * (4.0 * r1_6 * (672.0 * m5 * r2 + 151.0 * r2_4) -
                     2.0 * r1_4 * (3744.0 * m5 * r2_3 + 209.0 * r2_6) +
                     26.0 * r2_7 * (96.0 * m5 + r2_3) - 23.0 * std::pow(r1, 10) -
                     56.0 * r1_8 * r2_2 - 133.0 * r1_2 * r2_8)) -
          4.0 * r2_3 * dm * lr * lr *
              (-36864.0 * m4 * m4 * (r1_4 - r2_4) +
               192.0 * m4 *
                   (6.0 * r1_4 * (16.0 * m5 * r2 + 3.0 * r2_4) -
                    r1_2 * (96.0 * m5 * r2_3 + 13.0 * r2_6) + 96.0 * m5 * r2_5 +
                    10.0 * r1_8 - 14.0 * r1_6 * r2_2 - r2_8) -
               r1_8 * (192.0 * m5 * r2 + 209.0 * r2_4) -
               9.0 * r1_6 * (128.0 * m5 * r2_3 - 3.0 * r2_6) +
               r1_4 * (3840.0 * m5 * r2_5 + 137.0 * r2_8) -
               2.0 * r2_8 * r2 * (96.0 * m5 + r2_3) + 2.0 * std::pow(r1, 12) +
               25.0 * std::pow(r1, 10) * r2_2 + 20.0 * r1_2 * std::pow(r2, 10)) +
          192.0 * r1_4 * r2_7 * sq(sq(lr)) *
              (192.0 * m4 * (r2_2 - r1_2) + 96.0 * m5 * r2_3 + 2.0 * r1_6 + r2_6) -
          48.0 * r1_2 * r2_5 * cube(lr) *
              (192.0 * m4 * sq(dm) * (3.0 * r1_2 + r2_2) +
               r2_2 * (-3.0 * r1_4 * (96.0 * m5 * r2 + r2_4) +
                       8.0 * r1_2 * (48.0 * m5 * r2_3 + r2_6) + 96.0 * m5 * r2_5 -
                       14.0 * r1_8 + 8.0 * r1_6 * r2_2 + r2_8));
      return {"ctrl_gq_q", "64 (b-z_d)/P2 |...| (annulus pair q)",
              64.0 * std::abs(d) / p2 * std::abs(inner), true};
    }
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a control quantity");
}

LimitConstant shell_control_limit(const Geometry& geom, const ProblemData& dt,
                                  GapQuantity qty) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, d = dt.b - dt.z_d;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double m = r1 * r1 + r1 * r2 + r2 * r2; // r1^2 + r1 r2 + r2^2
  const double dm = r1 - r2;
  const double r1_2 = r1 * r1, r2_2 = r2 * r2;
  const double r1_3 = cube(r1), r2_3 = cube(r2), r1_4 = sq(r1_2), r2_4 = sq(r2_2);
  switch (qty) {
    case GapQuantity::ctrl_g: {
      const double poly = 2.0 * r1_4 + 10.0 * r1_3 * r2 + 30.0 * r1_2 * r2_2 +
                          49.0 * r1 * r2_3 + 35.0 * r2_4;
      const double g3 = 4.0 * sq(315.0 * m1 * r1_2 * m + poly * sq(sq(dm)));
      const double inner =
          4.0 * d * m *
              (1575.0 * m1 * r1_2 * sq(m) -
               sq(sq(dm)) * (4.0 * std::pow(r1, 6) + 24.0 * std::pow(r1, 5) * r2 +
                             84.0 * r1_4 * r2_2 + 199.0 * r1_3 * r2_3 +
                             354.0 * r1_2 * r2_4 + 420.0 * r1 * std::pow(r2, 5) +
                             175.0 * std::pow(r2, 6))) -
          630.0 * m1 * q * r2_2 * r1 * m *
              (-7.0 * r1_4 - 14.0 * r1_3 * r2 - 6.0 * r1_2 * r2_2 + 7.0 * r1 * r2_3 +
               20.0 * r2_4) -
          3.0 * q * r2_2 * sq(sq(dm)) *
              (7.0 * std::pow(r1, 7) + 49.0 * std::pow(r1, 6) * r2 +
               146.0 * std::pow(r1, 5) * r2_2 + 198.0 * r1_4 * r2_3 +
               105.0 * r1_3 * r2_4 - 170.0 * r1_2 * std::pow(r2, 5) -
               265.0 * r1 * std::pow(r2, 6) - 70.0 * std::pow(r2, 7));
      return {"ctrl_g", "21 (r2-r1)/G3 |...| (shell)",
              21.0 * (r2 - r1) / g3 * std::abs(inner), true};
    }
    case GapQuantity::ctrl_q: {
      const double q3 = 40.0 * sq(r2_2 * cube(dm) - 3.0 * m2 * r1_2);
      const double inner =
          20.0 * d * (6.0 * m2 * r1_2 * m - r2_2 * cube(dm) * (r1_2 - 2.0 * r1 * r2 - 2.0 * r2_2)) +
          g * sq(dm) *
              (4.0 * m2 * r1 * (7.0 * r1_3 + 21.0 * r1_2 * r2 + 27.0 * r1 * r2_2 + 20.0 * r2_3) -
               r2_2 * cube(dm) * (7.0 * r1_2 + 14.0 * r1 * r2 + 4.0 * r2_2));
      return {"ctrl_q", "(r2-r1)/Q3 |20 (b-z_d)[...] + g (r1-r2)^2 [...]| (shell)",
              (r2 - r1) / q3 * std::abs(inner), true};
    }
    case GapQuantity::ctrl_b:
      return {"ctrl_b",
              "|(r1^3-r2^3)(g (r1^3-r2^3) + 3 q r2^2) / (3 r1^2 (-3 M3 r1^2 + r1^3 - r2^3))|",
              std::abs((r1_3 - r2_3) * (g * (r1_3 - r2_3) + 3.0 * q * r2_2) /
                       (3.0 * r1_2 * (-3.0 * m3 * r1_2 + r1_3 - r2_3))),
              true};
    case GapQuantity::ctrl_gq_g:
    case GapQuantity::ctrl_gq_q: {
      const double poly = 2.0 * r1_4 + 10.0 * r1_3 * r2 + 30.0 * r1_2 * r2_2 +
                          49.0 * r1 * r2_3 + 35.0 * r2_4;
      const double p3 =
          sq(33600.0 * m4 * m * (3.0 * m5 * r1_2 - r2_2 * cube(dm)) +
             sq(sq(dm)) * (320.0 * m5 * poly -
                           r2_2 * cube(dm) * (99.0 * r1_2 + 152.0 * r1 * r2 + 64.0 * r2_2)));
      if (qty == GapQuantity::ctrl_gq_g) {
        const double inner =
            16800.0 * m4 * m *
                (240.0 * m5 * m5 * r1_2 * sq(m) -
                 2.0 * m5 * r2_2 *
                     (59.0 * r1_4 + 55.0 * r1_3 * r2 + 27.0 * r1_2 * r2_2 -
                      56.0 * r1 * r2_3 - 40.0 * r2_4) *
                     cube(dm) +
                 r2_4 * (15.0 * r1_2 + 2.0 * r1 * r2 - 2.0 * r2_2) * sq(cube(dm))) -
            sq(sq(dm)) *
                (2560.0 * m5 * m5 *
                     (4.0 * std::pow(r1, 8) + 28.0 * std::pow(r1, 7) * r2 +
                      112.0 * std::pow(r1, 6) * r2_2 + 307.0 * std::pow(r1, 5) * r2_3 +
                      637.0 * r1_4 * r2_4 + 973.0 * r1_3 * std::pow(r2, 5) +
                      949.0 * r1_2 * std::pow(r2, 6) + 595.0 * r1 * std::pow(r2, 7) +
                      175.0 * std::pow(r2, 8)) -
                 8.0 * m5 * r2_2 *
                     (417.0 * std::pow(r1, 6) + 1610.0 * std::pow(r1, 5) * r2 +
                      2915.0 * r1_4 * r2_2 + 1490.0 * r1_3 * r2_3 - 575.0 * r1_2 * r2_4 +
                      3448.0 * r1 * std::pow(r2, 5) + 1720.0 * std::pow(r2, 6)) *
                     cube(dm) +
                 r2_4 * (297.0 * r1_4 + 525.0 * r1_3 * r2 + 433.0 * r1_2 * r2_2 +
                         256.0 * r1 * r2_3 + 64.0 * r2_4) *
                     sq(cube(dm)));
        return {"ctrl_gq_g", "840 (r2-r1)(b-z_d)/P3 |...| (shell pair g)",
                840.0 * (r2 - r1) * std::abs(d) / p3 * std::abs(inner), true};
      }
      const double inner =
          23520000.0 * m4 * m4 * sq(m) *
              (6.0 * m5 * r1_2 * m - r2_2 * cube(dm) * (r1_2 - 2.0 * r1 * r2 - 2.0 * r2_2)) -
          1400.0 * m4 * m * sq(sq(dm)) *
              (8.0 * m5 *
                   (281.0 * std::pow(r1, 6) + 1686.0 * std::pow(r1, 5) * r2 +
                    4431.0 * r1_4 * r2_2 + 6446.0 * r1_3 * r2_3 + 6441.0 * r1_2 * r2_4 +
                    4200.0 * r1 * std::pow(r2, 5) + 1400.0 * std::pow(r2, 6)) -
               r2_2 * cube(dm) *
                   (489.0 * r1_4 + 2153.0 * r1_3 * r2 + 3105.0 * r1_2 * r2_2 +
                    600.0 * r1 * r2_3 - 152.0 * r2_4)) -
          sq(sq(sq(dm))) *
              (320.0 * m5 *
                   (4.0 * std::pow(r1, 8) + 44.0 * std::pow(r1, 7) * r2 +
                    264.0 * std::pow(r1, 6) * r2_2 + 1049.0 * std::pow(r1, 5) * r2_3 +
                    2539.0 * r1_4 * r2_4 + 3495.0 * r1_3 * std::pow(r2, 5) +
                    2055.0 * r1_2 * std::pow(r2, 6) - 315.0 * r1 * std::pow(r2, 7) -
                    315.0 * std::pow(r2, 8)) -
               r2_2 * cube(dm) *
                   (99.0 * std::pow(r1, 6) + 106.0 * std::pow(r1, 5) * r2 -
                    1675.0 * r1_4 * r2_2 - 3270.0 * r1_3 * r2_3 - 3405.0 * r1_2 * r2_4 -
                    2304.0 * r1 * std::pow(r2, 5) - 576.0 * std::pow(r2, 6)));
      const double p3q = p3; // same denominator
      return {"ctrl_gq_q", "24 (r2-r1)(b-z_d)/P3 |...| (shell pair q)",
              24.0 * (r2 - r1) * std::abs(d) / p3q * std::abs(inner), true};
    }
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a control quantity");
}

} // namespace

LimitConstant control_gap_limit(const Geometry& geom, const ProblemData& dt,
                                GapQuantity qty) {
  validate(dt);
  switch (geom.domain()) {
    case Domain::rectangle: return rect_control_limit(geom, dt, qty);
    case Domain::annulus: return annulus_control_limit(geom, dt, qty);
    case Domain::shell: return shell_control_limit(geom, dt, qty);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

namespace {

LimitConstant rect_cost_limit(const Geometry& geom, const ProblemData& dt, GapQuantity qty) {
  const double x0 = geom.x0(), y0 = geom.y0();
  const double g = dt.g, q = dt.q, zd = dt.z_d, d = dt.b - dt.z_d;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double x3 = cube(x0), x4 = x3 * x0, x5 = x4 * x0, x7 = x5 * x0 * x0;
  switch (qty) {
    case GapQuantity::cost_j1:
      return {"cost_J1",
              "x0 y0/(192 (15 M1 + 2 x0^4)^2) |(40(b-z_d) x0^3 + 3 q (40 M1 + 3 x0^4)) "
              "(8(b-z_d)(45 M1 + x0^4) + q x0 (x0^4 - 180 M1))|",
              x0 * y0 / (192.0 * sq(15.0 * m1 + 2.0 * x4)) *
                  std::abs((40.0 * d * x3 + 3.0 * q * (40.0 * m1 + 3.0 * x4)) *
                           (8.0 * d * (45.0 * m1 + x4) + q * x0 * (x4 - 180.0 * m1))),
              true};
    case GapQuantity::cost_j2:
      return {"cost_J2",
              "x0^2 y0/(128 (3 M2 + x0^3)^2) |(-4(b-z_d) x0 + g (8 M2 + x0^3)) "
              "(12(b-z_d)(x0^3 + 12 M2) + g x0^2 (48 M2 + x0^3))|",
              x0 * x0 * y0 / (128.0 * sq(3.0 * m2 + x3)) *
                  std::abs((-4.0 * d * x0 + g * (8.0 * m2 + x3)) *
                           (12.0 * d * (x3 + 12.0 * m2) + g * x0 * x0 * (48.0 * m2 + x3))),
              true};
    case GapQuantity::cost_j3:
      return {"cost_J3",
              "|M3 x0 y0 (g x0 - q)(2 g x0^2 - 3 q x0 - 6 z_d)| / (6 (M3 + x0))",
              std::abs(m3 * x0 * y0 * (g * x0 - q) *
                       (2.0 * g * x0 * x0 - 3.0 * q * x0 - 6.0 * zd)) /
                  (6.0 * (m3 + x0)),
              true};
    case GapQuantity::cost_j4:
      return {"cost_J4",
              "64 x0^3 y0 (b-z_d)^2 (120 M4 + 80 M5 x0 + x0^4)"
              "(180 M4 M5 + 15 M4 x0^3 + 4 M5 x0^4 + x0^7) "
              "/ (3 (960 M4 M5 + 320 M4 x0^3 + 128 M5 x0^4 + x0^7)^2)",
              64.0 * x3 * y0 * d * d * (120.0 * m4 + 80.0 * m5 * x0 + x4) *
                  (180.0 * m4 * m5 + 15.0 * m4 * x3 + 4.0 * m5 * x4 + x7) /
                  (3.0 * sq(960.0 * m4 * m5 + 320.0 * m4 * x3 + 128.0 * m5 * x4 + x7)),
              true};
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a cost quantity");
}

LimitConstant annulus_cost_limit(const Geometry& geom, const ProblemData& dt,
                                 GapQuantity qty) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, b = dt.b, zd = dt.z_d, d = b - zd;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double lr = std::log(r2 / r1);
  const double r1_2 = r1 * r1, r2_2 = r2 * r2;
  const double r1_4 = sq(r1_2), r1_6 = r1_4 * r1_2, r1_8 = sq(r1_4);
  const double r2_3 = r2_2 * r2, r2_4 = sq(r2_2), r2_5 = r2_4 * r2, r2_6 = r2_4 * r2_2,
               r2_7 = r2_6 * r2, r2_8 = sq(r2_4);
  const double dm = r1_2 - r2_2;
  switch (qty) {
    case GapQuantity::cost_j1: {
      const double j12 = 16.0 * r1 *
                         sq(dm * (96.0 * m1 + 2.0 * r1_4 - 13.0 * r1_2 * r2_2 + 17.0 * r2_4) +
                            (36.0 * r2_6 - 24.0 * r1_2 * r2_4) * lr - 24.0 * r2_6 * lr * lr);
      const double b1 =
          12.0 * b * r1_6 - 60.0 * b * r1_4 * r2_2 + 84.0 * b * r1_2 * r2_4 -
          48.0 * b * r1_2 * r2_4 * lr + 48.0 * b * r2_6 * lr - 36.0 * b * r2_6 -
          192.0 * m1 * q * r1_2 * r2 + 192.0 * m1 * q * r2_3 + 5.0 * q * r1_6 * r2 -
          15.0 * q * r1_4 * r2_3 + 24.0 * q * r1_4 * r2_3 * lr + 3.0 * q * r1_2 * r2_5 +
          48.0 * q * r1_2 * r2_5 * lr * lr - 36.0 * q * r1_2 * r2_5 * lr -
          12.0 * q * r2_7 * lr + 7.0 * q * r2_7 - 12.0 * r1_6 * zd +
          60.0 * r1_4 * r2_2 * zd - 84.0 * r1_2 * r2_4 * zd + 48.0 * r1_2 * r2_4 * zd * lr -
          48.0 * r2_6 * zd * lr + 36.0 * r2_6 * zd;
      const double b2 =
          -768.0 * m1 * q * r2_5 * lr - 1536.0 * b * m1 * r1_2 * r2_2 +
          768.0 * b * m1 * r2_4 + 4.0 * b * r1_8 - 40.0 * b * r1_6 * r2_2 +
          96.0 * b * r1_4 * r2_4 - 96.0 * b * r1_4 * r2_4 * lr - 88.0 * b * r1_2 * r2_6 -
          192.0 * b * r1_2 * r2_6 * lr * lr + 96.0 * b * r1_2 * r2_6 * lr +
          28.0 * b * r2_8 + 384.0 * m1 * q * r1_4 * r2 - 768.0 * m1 * q * r1_2 * r2_3 +
          768.0 * m1 * q * r1_2 * r2_3 * lr + 768.0 * b * m1 * r1_4 +
          384.0 * m1 * q * r2_5 - 768.0 * m1 * r1_4 * zd + 1536.0 * m1 * r1_2 * r2_2 * zd -
          768.0 * m1 * r2_4 * zd - q * r1_8 * r2 + 4.0 * q * r1_6 * r2_3 -
          8.0 * q * r1_6 * r2_3 * lr - 18.0 * q * r1_4 * r2_5 -
          48.0 * q * r1_4 * r2_5 * lr * lr - 24.0 * q * r1_4 * r2_5 * lr +
          28.0 * q * r1_2 * r2_7 + 24.0 * q * r1_2 * r2_7 * lr + 8.0 * q * r2_8 * r2 * lr -
          13.0 * q * r2_8 * r2 - 4.0 * r1_8 * zd + 40.0 * r1_6 * r2_2 * zd -
          96.0 * r1_4 * r2_4 * zd + 96.0 * r1_4 * r2_4 * zd * lr + 88.0 * r1_2 * r2_6 * zd +
          192.0 * r1_2 * r2_6 * zd * lr * lr - 96.0 * r1_2 * r2_6 * zd * lr -
          28.0 * r2_8 * zd;
      return {"cost_J1", "pi/J12 |[...][...]| (annulus)", kPi / j12 * std::abs(b1 * b2), true};
    }
    case GapQuantity::cost_j2: {
      const double j22 =
          512.0 * r1 * sq(4.0 * m2 - r1_2 * r2 + 2.0 * r2_3 * lr * lr - 2.0 * r2_3 * lr + r2_3);
      const double b1 = 16.0 * b * r1_2 * r2 + 32.0 * b * r2_3 * lr - 16.0 * b * r2_3 +
                        32.0 * g * m2 * r1_2 - 32.0 * g * m2 * r2_2 - 5.0 * g * r1_4 * r2 +
                        4.0 * g * r1_2 * r2_3 + 16.0 * g * r1_2 * r2_3 * lr * lr -
                        8.0 * g * r1_2 * r2_3 * lr - 4.0 * g * r2_5 * lr + g * r2_5 -
                        16.0 * r1_2 * r2 * zd - 32.0 * r2_3 * zd * lr + 16.0 * r2_3 * zd;
      const double b2 = 128.0 * b * m2 * r1_2 - 128.0 * b * m2 * r2_2 -
                        16.0 * b * r1_4 * r2 + 32.0 * b * r1_2 * r2_3 +
                        64.0 * b * r1_2 * r2_3 * lr * lr - 16.0 * b * r2_5 +
                        16.0 * g * m2 * r1_4 - 64.0 * g * m2 * r1_2 * r2_2 -
                        64.0 * g * m2 * r2_4 * lr + 48.0 * g * m2 * r2_4 - g * r1_6 * r2 +
                        5.0 * g * r1_4 * r2_3 + 8.0 * g * r1_4 * r2_3 * lr * lr +
                        6.0 * g * r1_4 * r2_3 * lr - 7.0 * g * r1_2 * r2_5 -
                        4.0 * g * r1_2 * r2_5 * lr - 2.0 * g * r2_7 * lr + 3.0 * g * r2_7 -
                        128.0 * m2 * r1_2 * zd + 128.0 * m2 * r2_2 * zd +
                        16.0 * r1_4 * r2 * zd - 32.0 * r1_2 * r2_3 * zd -
                        64.0 * r1_2 * r2_3 * zd * lr * lr + 16.0 * r2_5 * zd;
      return {"cost_J2", "pi/J22 |[...][...]| (annulus)", kPi / j22 * std::abs(b1 * b2), true};
    }
    case GapQuantity::cost_j3: {
      const double inner = g * r1_2 * r1 * dm + 4.0 * q * r1 * r2 * dm -
                           3.0 * g * r1 * r2_2 * dm - 8.0 * r1 * dm * zd -
                           4.0 * r1 * r2_3 * (-2.0 * q + g * r2) * lr;
      return {"cost_J3",
              "pi |M3 (g (r1^2-r2^2) + 2 q r2)| / |8 r1 (-2 M3 r1 + r1^2 - r2^2)| |...|",
              kPi * std::abs(m3 * (g * dm + 2.0 * q * r2)) /
                  std::abs(8.0 * r1 * (-2.0 * m3 * r1 + dm)) * std::abs(inner),
              true};
    }
    case GapQuantity::cost_j4: {
      const double j42 =
          r1 * sq(6144.0 * m4 * m5 * r1_2 - 6144.0 * m4 * m5 * r2_2 -
                  1536.0 * m4 * r1_4 * r2 + 3072.0 * m4 * r1_2 * r2_3 +
                  3072.0 * m4 * r1_2 * r2_3 * lr * lr - 3072.0 * m4 * r1_2 * r2_3 * lr -
                  3072.0 * m4 * r2_5 * lr * lr + 3072.0 * m4 * r2_5 * lr -
                  1536.0 * m4 * r2_5 + 128.0 * m5 * r1_6 - 960.0 * m5 * r1_4 * r2_2 +
                  1920.0 * m5 * r1_2 * r2_4 - 1536.0 * m5 * r1_2 * r2_4 * lr -
                  1536.0 * m5 * r2_6 * lr * lr + 2304.0 * m5 * r2_6 * lr -
                  1088.0 * m5 * r2_6 - 5.0 * r1_8 * r2 + 56.0 * r1_6 * r2_3 +
                  64.0 * r1_6 * r2_3 * lr * lr + 80.0 * r1_6 * r2_3 * lr -
                  126.0 * r1_4 * r2_5 - 72.0 * r1_4 * r2_5 * lr + 104.0 * r1_2 * r2_7 -
                  48.0 * r1_2 * r2_7 * lr - 16.0 * r2_8 * r2 * lr * lr +
                  40.0 * r2_8 * r2 * lr - 29.0 * r2_8 * r2);
      const double b1 =
          -384.0 * m4 * r1_4 * r2 + 768.0 * m4 * r1_2 * r2_3 -
          768.0 * m4 * r1_2 * r2_3 * lr + 768.0 * m4 * r2_5 * lr - 384.0 * m4 * r2_5 +
          96.0 * m5 * r1_6 - 480.0 * m5 * r1_4 * r2_2 + 672.0 * m5 * r1_2 * r2_4 -
          384.0 * m5 * r1_2 * r2_4 * lr + 384.0 * m5 * r2_6 * lr - 288.0 * m5 * r2_6 -
          5.0 * r1_8 * r2 + 32.0 * r1_6 * r2_3 + 48.0 * r1_6 * r2_3 * lr * lr +
          44.0 * r1_6 * r2_3 * lr - 54.0 * r1_4 * r2_5 - 36.0 * r1_4 * r2_5 * lr +
          32.0 * r1_2 * r2_7 - 12.0 * r1_2 * r2_7 * lr + 4.0 * r2_8 * r2 * lr -
          5.0 * r2_8 * r2;
      const double b2 =
          6144.0 * m4 * m5 * r1_4 - 12288.0 * m4 * m5 * r1_2 * r2_2 +
          6144.0 * m4 * m5 * r2_4 - 768.0 * m4 * r1_6 * r2 + 2304.0 * m4 * r1_4 * r2_3 +
          3072.0 * m4 * r1_4 * r2_3 * lr * lr - 2304.0 * m4 * r1_2 * r2_5 -
          3072.0 * m4 * r1_2 * r2_5 * lr * lr + 768.0 * m4 * r2_7 + 32.0 * m5 * r1_8 -
          320.0 * m5 * r1_6 * r2_2 + 768.0 * m5 * r1_4 * r2_4 -
          768.0 * m5 * r1_4 * r2_4 * lr - 704.0 * m5 * r1_2 * r2_6 -
          1536.0 * m5 * r1_2 * r2_6 * lr * lr + 768.0 * m5 * r1_2 * r2_6 * lr +
          224.0 * m5 * r2_8 - r1_8 * r1_2 * r2 + 17.0 * r1_8 * r2_3 +
          16.0 * r1_8 * r2_3 * lr * lr + 24.0 * r1_8 * r2_3 * lr - 46.0 * r1_6 * r2_5 -
          24.0 * r1_6 * r2_5 * lr + 46.0 * r1_4 * r2_7 - 24.0 * r1_4 * r2_7 * lr -
          17.0 * r1_2 * r2_8 * r2 - 16.0 * r1_2 * r2_8 * r2 * lr * lr +
          24.0 * r1_2 * r2_8 * r2 * lr + r2_8 * r2_3;
      return {"cost_J4", "4 pi (b-z_d)^2/J42 |[...][...]| (annulus)",
              4.0 * kPi * d * d / j42 * std::abs(b1 * b2), true};
    }
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a cost quantity");
}

LimitConstant shell_cost_limit(const Geometry& geom, const ProblemData& dt,
                               GapQuantity qty) {
  const double r1 = geom.r1(), r2 = geom.r2();
  const double g = dt.g, q = dt.q, zd = dt.z_d, d = dt.b - dt.z_d;
  const double m1 = dt.m1, m2 = dt.m2, m3 = dt.m3, m4 = dt.m4, m5 = dt.m5;
  const double m = r1 * r1 + r1 * r2 + r2 * r2;
  const double dm = r1 - r2;
  const double r1_2 = r1 * r1, r2_2 = r2 * r2, r1_3 = cube(r1), r2_3 = cube(r2);
  const double r1_4 = sq(r1_2), r2_4 = sq(r2_2), r1_5 = r1_4 * r1, r2_5 = r2_4 * r2;
  switch (qty) {
    case GapQuantity::cost_j1: {
      const double poly = 2.0 * r1_4 + 10.0 * r1_3 * r2 + 30.0 * r1_2 * r2_2 +
                          49.0 * r1 * r2_3 + 35.0 * r2_4;
      const double j13 = 80.0 * sq(315.0 * m1 * r1_2 * m + poly * sq(sq(dm)));
      const double b1 =
          q * (2520.0 * m1 * r1_3 * r2_2 + 33.0 * std::pow(r1, 7) * r2_2 -
               2520.0 * m1 * r1_2 * r2_3 + 33.0 * std::pow(r1, 6) * r2_3 -
               2520.0 * m1 * r1 * r2_4 - 177.0 * r1_5 * r2_4 - 198.0 * r1_4 * r2_5 +
               747.0 * r1_3 * std::pow(r2, 6) - 471.0 * r1_2 * std::pow(r2, 7) -
               51.0 * r1 * std::pow(r2, 8) + 84.0 * std::pow(r2, 9)) +
          d * (56.0 * std::pow(r1, 8) + 56.0 * std::pow(r1, 7) * r2 +
               56.0 * std::pow(r1, 6) * r2_2 - 280.0 * r1_5 * r2_3 - 280.0 * r1_4 * r2_4 +
               224.0 * r1_3 * r2_5 + 224.0 * r1_2 * std::pow(r2, 6) +
               224.0 * r1 * std::pow(r2, 7) - 280.0 * std::pow(r2, 8));
      const double b2 =
          q * (2100.0 * m1 * r1_4 * r2_2 - 3.0 * std::pow(r1, 8) * r2_2 +
               4200.0 * m1 * r1_3 * r2_3 - 6.0 * std::pow(r1, 7) * r2_3 +
               21.0 * std::pow(r1, 6) * r2_4 - 2100.0 * m1 * r1 * r2_5 +
               63.0 * r1_5 * r2_5 - 4200.0 * m1 * std::pow(r2, 6) -
               210.0 * r1_4 * std::pow(r2, 6) + 168.0 * r1_3 * std::pow(r2, 7) +
               21.0 * r1_2 * std::pow(r2, 8) - 81.0 * r1 * std::pow(r2, 9) +
               27.0 * std::pow(r2, 10)) +
          d * (4200.0 * m1 * r1_5 + 8.0 * std::pow(r1, 9) + 8400.0 * m1 * r1_4 * r2 +
               16.0 * std::pow(r1, 8) * r2 + 12600.0 * m1 * r1_3 * r2_2 +
               24.0 * std::pow(r1, 7) * r2_2 + 8400.0 * m1 * r1_2 * r2_3 -
               88.0 * std::pow(r1, 6) * r2_3 + 4200.0 * m1 * r1 * r2_4 -
               200.0 * r1_5 * r2_4 + 192.0 * r1_4 * r2_5 + 584.0 * r1_3 * std::pow(r2, 6) -
               824.0 * r1_2 * std::pow(r2, 7) + 288.0 * r1 * std::pow(r2, 8));
      return {"cost_J1", "pi (r2-r1)/J13 |[...][...]| (shell)",
              kPi * (r2 - r1) / j13 * std::abs(b1 * b2), true};
    }
    case GapQuantity::cost_j2: {
      const double j23 = 2400.0 * sq(r2_2 * cube(dm) - 3.0 * m2 * r1_2);
      const double b1 = g * (-40.0 * m2 * r1_3 - 40.0 * m2 * r1_2 * r2 -
                             40.0 * m2 * r1 * r2_2 + 11.0 * r1_4 * r2_2 -
                             29.0 * r1_3 * r2_3 + 21.0 * r1_2 * r2_4 + r1 * r2_5 -
                             4.0 * std::pow(r2, 6)) +
                        d * (-20.0 * r1_2 * r2_2 - 20.0 * r1 * r2_3 + 40.0 * r2_4);
      const double b2 =
          g * (-16.0 * m2 * r1_5 - 16.0 * m2 * r1_4 * r2 - 16.0 * m2 * r1_3 * r2_2 +
               3.0 * std::pow(r1, 6) * r2_2 + 64.0 * m2 * r1_2 * r2_3 -
               13.0 * r1_5 * r2_3 + 64.0 * m2 * r1 * r2_4 + 20.0 * r1_4 * r2_4 -
               80.0 * m2 * r2_5 - 10.0 * r1_3 * r2_5 - 5.0 * r1_2 * std::pow(r2, 6) +
               7.0 * r1 * std::pow(r2, 7) - 2.0 * std::pow(r2, 8)) +
          d * (-240.0 * m2 * r1_3 - 240.0 * m2 * r1_2 * r2 - 240.0 * m2 * r1 * r2_2 +
               60.0 * r1_4 * r2_2 - 180.0 * r1_3 * r2_3 + 180.0 * r1_2 * r2_4 -
               60.0 * r1 * r2_5);
      return {"cost_J2", "pi (r2-r1)^2/J23 |[...][...]| (shell)",
              kPi * sq(r2 - r1) / j23 * std::abs(b1 * b2), true};
    }
    case GapQuantity::cost_j3: {
      const double inner =
          2.0 * g * g * m3 * r1 *
              (std::pow(r1, 9) - 6.0 * std::pow(r1, 6) * r2_3 + 9.0 * r1_4 * r2_5 -
               9.0 * r1 * std::pow(r2, 8) + 5.0 * std::pow(r2, 9)) -
          3.0 * g * m3 * r1 *
              (10.0 * r1 * zd * sq(r1_3 - r2_3) -
               q * r2_2 * cube(dm) *
                   (7.0 * r1_3 + 21.0 * r1_2 * r2 + 27.0 * r1 * r2_2 + 20.0 * r2_3)) +
          15.0 * q * r2_2 *
              (3.0 * m3 * r1 *
                   (q * r2_2 * sq(dm) * (r1 + 2.0 * r2) + 2.0 * r1 * zd * (r1_3 - r2_3)) -
               4.0 * zd * sq(r1_3 - r2_3));
      return {"cost_J3", "2 pi/(45 r1^2 |-3 M3 r1^2 + r1^3 - r2^3|) |...| (shell)",
              2.0 * kPi / (45.0 * r1_2 * std::abs(-3.0 * m3 * r1_2 + r1_3 - r2_3)) *
                  std::abs(inner),
              true};
    }
    case GapQuantity::cost_j4: {
      const double poly = 2.0 * r1_4 + 10.0 * r1_3 * r2 + 30.0 * r1_2 * r2_2 +
                          49.0 * r1 * r2_3 + 35.0 * r2_4;
      const double j43 =
          sq(33600.0 * m4 * m * (3.0 * m5 * r1_2 - r2_2 * cube(dm)) +
             sq(sq(dm)) * (320.0 * m5 * poly -
                           r2_2 * cube(dm) * (99.0 * r1_2 + 152.0 * r1 * r2 + 64.0 * r2_2)));
      const double b1 =
          35280000.0 * m4 * m4 * r2_2 * (r1 + 2.0 * r2) * sq(m) *
              (4.0 * m5 * m - r2_2 * cube(dm)) -
          4200.0 * m4 * (r1_3 - r2_3) *
              (4480.0 * m5 * m5 * sq(m) *
                   (r1_3 + 3.0 * r1_2 * r2 + 6.0 * r1 * r2_2 + 5.0 * r2_3) -
               8.0 * m5 * r2_2 *
                   (247.0 * r1_5 + 856.0 * r1_4 * r2 + 1963.0 * r1_3 * r2_2 +
                    2840.0 * r1_2 * r2_3 + 2567.0 * r1 * r2_4 + 1292.0 * r2_5) *
                   cube(dm) +
               r2_4 * (207.0 * r1_3 + 301.0 * r1_2 * r2 + 177.0 * r1 * r2_2 +
                       50.0 * r2_3) *
                   sq(cube(dm))) +
          std::pow(dm, 5) *
              (-(35840.0 * m5 * m5 *
                     (std::pow(r1, 9) + 10.0 * std::pow(r1, 8) * r2 +
                      55.0 * std::pow(r1, 7) * r2_2 + 199.0 * std::pow(r1, 6) * r2_3 +
                      505.0 * r1_5 * r2_4 + 919.0 * r1_4 * r2_5 +
                      1195.0 * r1_3 * std::pow(r2, 6) + 1060.0 * r1_2 * std::pow(r2, 7) +
                      601.0 * r1 * std::pow(r2, 8) + 180.0 * std::pow(r2, 9)) -
                 16.0 * m5 * r2_2 *
                     (711.0 * std::pow(r1, 7) + 4763.0 * std::pow(r1, 6) * r2 +
                      17621.0 * r1_5 * r2_2 + 40700.0 * r1_4 * r2_3 +
                      57025.0 * r1_3 * r2_4 + 44014.0 * r1_2 * r2_5 +
                      18712.0 * r1 * std::pow(r2, 6) + 3879.0 * std::pow(r2, 7)) *
                     cube(dm) +
                 r2_4 * (891.0 * r1_5 + 2880.0 * r1_4 * r2 + 3755.0 * r1_3 * r2_2 +
                         2480.0 * r1_2 * r2_3 + 875.0 * r1 * r2_4 + 144.0 * r2_5) *
                     sq(cube(dm))));
      // (r2-r1)^3 restored in the prefactor; see the formula-audit notes.
      return {"cost_J4", "16 pi r1 (r2-r1)^3 (b-z_d)^2/J43 |...| (shell)",
              16.0 * kPi * r1 * cube(r2 - r1) * d * d / j43 * std::abs(b1), true};
    }
    default: break;
  }
  throw Error(Errc::invalid_argument, "not a cost quantity");
}

} // namespace

LimitConstant cost_gap_limit(const Geometry& geom, const ProblemData& dt, GapQuantity qty) {
  validate(dt);
  switch (geom.domain()) {
    case Domain::rectangle: return rect_cost_limit(geom, dt, qty);
    case Domain::annulus: return annulus_cost_limit(geom, dt, qty);
    case Domain::shell: return shell_cost_limit(geom, dt, qty);
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

LimitConstant closed_form_limit(const Geometry& geom, const ProblemData& dt,
                                GapQuantity qty) {
  switch (qty) {
    case GapQuantity::state_l2: return state_gap_constant(geom, dt);
    case GapQuantity::adjoint_l2: return adjoint_gap_limit(geom, dt);
    case GapQuantity::ctrl_g:
    case GapQuantity::ctrl_q:
    case GapQuantity::ctrl_b:
    case GapQuantity::ctrl_gq_g:
    case GapQuantity::ctrl_gq_q: return control_gap_limit(geom, dt, qty);
    case GapQuantity::cost_j1:
    case GapQuantity::cost_j2:
    case GapQuantity::cost_j3:
    case GapQuantity::cost_j4: return cost_gap_limit(geom, dt, qty);
    default: break;
  }
  LimitConstant lc;
  lc.name = to_string(qty);
  lc.has_closed_form = false;
  return lc;
}

} // namespace ellbench
