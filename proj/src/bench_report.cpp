#include <ellbench/bench.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <ellbench/closed_form.hpp>
#include <ellbench/oracle.hpp>

namespace ellbench {

namespace {

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

} // namespace

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string solve_csv(const Geometry& geom, const ProblemData& data, double alpha, int n) {
  if (n < 2) throw Error(Errc::invalid_argument, "solve requires at least 2 sample points");
  const Profile u = state_dirichlet(geom, data);
  const Profile p = adjoint_dirichlet(geom, data);
  const Profile ua = state_robin(geom, data, alpha);
  const Profile pa = adjoint_robin(geom, data, alpha);
  std::string out = "coord,u,p,u_alpha,p_alpha\n";
  const double lo = geom.lower(), hi = geom.upper();
  for (int i = 0; i < n; ++i) {
    const double c = lo + (hi - lo) * i / (n - 1);
    out += format17(c) + "," + format17(u.value(c)) + "," + format17(p.value(c)) + "," +
           format17(ua.value(c)) + "," + format17(pa.value(c)) + "\n";
  }
  return out;
}

std::string coeffs_json(const Geometry& geom, double alpha) {
  const CoefficientSet dir = dirichlet_coefficients(geom);
  const CoefficientSet rob = robin_coefficients(geom, alpha);
  std::string out = "{\n  \"domain\": \"" + std::string(to_string(geom.domain())) +
                    "\",\n  \"alpha\": " + format17(alpha) + ",\n";
  auto block = [](const char* name, const CoefficientSet& c) {
    std::string s = std::string("  \"") + name + "\": {";
    for (int i = 0; i < 6; ++i) {
      s += std::string(i ? ", " : "") + "\"k" + std::to_string(i + 1) +
           "\": " + format17(c.k[i]);
    }
    return s + "}";
  };
  out += block("dirichlet", dir) + ",\n" + block("robin", rob) + "\n}\n";
  return out;
}

std::string optimal_json(const Geometry& geom, const ProblemData& data, ControlKind kind,
                         Variant variant, double alpha) {
  const ControlSolution sol = optimal_control(geom, data, kind, variant, alpha);
  const double scale =
      std::max(1.0, std::max(std::abs(sol.control[0]), std::abs(sol.control[1])));
  double oracle_c0 = 0.0, oracle_c1 = 0.0, oracle_cost = 0.0;
  if (kind == ControlKind::simultaneous) {
    const PairMinimum pm = minimize_pair_quadratic(
        [&](double vg, double vq) {
          return evaluate_cost(geom, data, kind, vg, vq, variant, alpha);
        },
        scale);
    oracle_c0 = pm.g;
    oracle_c1 = pm.q;
    oracle_cost = pm.value;
  } else {
    const ScalarMinimum sm = minimize_scalar_quadratic(
        [&](double v) { return evaluate_cost(geom, data, kind, v, 0.0, variant, alpha); },
        scale);
    oracle_c0 = sm.argmin;
    oracle_cost = sm.value;
  }
  const double rel_gap =
      std::max(std::abs(sol.control[0] - oracle_c0), std::abs(sol.control[1] - oracle_c1)) /
          scale +
      std::abs(sol.cost - oracle_cost) / (1.0 + std::abs(sol.cost));

  std::string out = "{\n  \"domain\": \"" + std::string(to_string(geom.domain())) +
                    "\",\n  \"problem\": \"" + to_string(kind) + "\",\n  \"variant\": \"" +
                    to_string(variant) + "\"";
  if (variant == Variant::robin) out += ",\n  \"alpha\": " + format17(alpha);
  if (kind == ControlKind::simultaneous) {
    out += ",\n  \"control\": [" + format17(sol.control[0]) + ", " +
           format17(sol.control[1]) + "]";
    out += ",\n  \"oracle_control\": [" + format17(oracle_c0) + ", " + format17(oracle_c1) +
           "]";
  } else {
    out += ",\n  \"control\": " + format17(sol.control[0]);
    out += ",\n  \"oracle_control\": " + format17(oracle_c0);
  }
  out += ",\n  \"cost\": " + format17(sol.cost);
  out += ",\n  \"oracle_cost\": " + format17(oracle_cost);
  out += ",\n  \"rel_gap\": " + format17(rel_gap) + "\n}\n";
  return out;
}

std::string sweep_csv(const Geometry& geom, const ProblemData& data, GapQuantity quantity,
                      const AlphaGrid& grid) {
  const auto alphas = geometric_grid(grid.start, grid.stop, grid.points);
  const auto records = alpha_sweep(geom, data, quantity, alphas);
  std::string out = "alpha,quantity,dirichlet_value,robin_value,gap,alpha_times_gap\n";
  for (const auto& r : records)
    out += format17(r.alpha) + "," + to_string(quantity) + "," +
           format17(r.dirichlet_value) + "," + format17(r.robin_value) + "," +
           format17(r.gap) + "," + format17(r.alpha_times_gap) + "\n";
  return out;
}

std::string limits_json(const Geometry& geom, const ProblemData& data,
                        const AlphaGrid& grid, double limit_tol) {
  const auto alphas = geometric_grid(grid.start, grid.stop, grid.points);
  const GapQuantity quantities[] = {
      GapQuantity::state_l2,  GapQuantity::adjoint_l2, GapQuantity::ctrl_g,
      GapQuantity::ctrl_q,    GapQuantity::ctrl_b,     GapQuantity::ctrl_gq_g,
      GapQuantity::ctrl_gq_q, GapQuantity::cost_j1,    GapQuantity::cost_j2,
      GapQuantity::cost_j3,   GapQuantity::cost_j4};
  std::string out = "[\n";
  bool first = true;
  for (GapQuantity qty : quantities) {
    const LimitConstant limit = closed_form_limit(geom, data, qty);
    const auto records = alpha_sweep(geom, data, qty, alphas);
    const RateFit fit = fit_order(records);
    double extrapolated = fit.exact_zero ? 0.0 : fit.extrapolated;
    const double denom = std::max(std::abs(limit.value), std::abs(extrapolated));
    const double rel = denom > 0.0 ? std::abs(limit.value - extrapolated) / denom : 0.0;
    std::string verdict;
    if (fit.exact_zero && limit.value == 0.0) verdict = "exact";
    else if (rel <= limit_tol) verdict = "pass";
    else verdict = "fail";
    if (!first) out += ",\n";
    first = false;
    out += "  {\"name\": \"" + limit.name + "\", \"closed_form\": " + format17(limit.value) +
           ", \"extrapolated\": " + format17(extrapolated) +
           ", \"rel_diff\": " + format17(rel) + ", \"verdict\": \"" + verdict + "\"";
    if (verdict == "fail") out += ", \"formula\": \"" + limit.formula + "\"";
    out += "}";
  }
  out += "\n]\n";
  return out;
}

std::string rows_csv(const std::vector<ReportRow>& rows) {
  std::string out = "domain,problem,variant,quantity,reference,oracle,abs_gap,rel_gap,verdict\n";
  for (const auto& r : rows)
    out += csv_safe(r.domain) + "," + csv_safe(r.problem) + "," + csv_safe(r.variant) +
           "," + csv_safe(r.quantity) + "," + format17(r.reference) + "," +
           format17(r.oracle) + "," + format17(r.abs_gap) + "," + format17(r.rel_gap) +
           "," + r.verdict + "\n";
  return out;
}

std::string verify_table(const std::vector<ReportRow>& rows) {
  std::string out;
  int pass = 0, fail = 0, exact = 0, skipped = 0;
  for (const auto& r : rows) {
    char line[512];
    std::snprintf(line, sizeof(line), "%-6s %-10s %-10s %-22s %-48s %12.5g\n",
                  r.verdict.c_str(), r.domain.c_str(), r.problem.c_str(),
                  r.variant.c_str(), r.quantity.c_str(), r.rel_gap);
    out += line;
    if (r.verdict == "pass") ++pass;
    else if (r.verdict == "fail") ++fail;
    else if (r.verdict == "exact") ++exact;
    else ++skipped;
  }
  out += "----\n";
  out += "pass " + std::to_string(pass) + ", exact " + std::to_string(exact) + ", skipped " +
         std::to_string(skipped) + ", fail " + std::to_string(fail) + "\n";
  return out;
}

AggregateReport aggregate_report(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw Error(Errc::invalid_argument, "report: not a directory: " + directory);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() > 9 && name.substr(name.size() - 9) == "_rows.csv")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());

  const std::string header =
      "domain,problem,variant,quantity,reference,oracle,abs_gap,rel_gap,verdict";
  std::string csv = header + "\n";
  int total = 0, pass = 0, fail = 0, exact = 0, skipped = 0;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "report: cannot read " + path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (first) {
        first = false;
        if (line == header) continue; // skip per-file header
      }
      csv += line + "\n";
      ++total;
      if (line.size() >= 5 && line.substr(line.size() - 5) == ",pass") ++pass;
      else if (line.size() >= 5 && line.substr(line.size() - 5) == ",fail") ++fail;
      else if (line.size() >= 6 && line.substr(line.size() - 6) == ",exact") ++exact;
      else ++skipped;
    }
  }
  std::string summary = "{\n  \"files\": " + std::to_string(files.size()) +
                        ",\n  \"rows\": " + std::to_string(total) +
                        ",\n  \"pass\": " + std::to_string(pass) +
                        ",\n  \"exact\": " + std::to_string(exact) +
                        ",\n  \"skipped\": " + std::to_string(skipped) +
                        ",\n  \"fail\": " + std::to_string(fail) +
                        ",\n  \"all_pass\": " + (fail == 0 ? "true" : "false") + "\n}\n";
  return {csv, summary};
}

} // namespace ellbench
