#include <ellbench.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include <ellbench/bench.hpp>
#include <ellbench/closed_form.hpp>
#include <ellbench/convergence.hpp>
#include <ellbench/optimal_control.hpp>

// Glue between the public C interface and the C++ core.

struct ellbench_problem_s {
  ellbench::Problem problem;
};

struct ellbench_profile_s {
  ellbench::Profile profile;
};

namespace {

thread_local std::string g_last_error;

int set_error(const ellbench::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case ellbench::Errc::invalid_argument: return ELLBENCH_EINVAL;
    case ellbench::Errc::constraint_violation: return ELLBENCH_ECONSTRAINT;
    case ellbench::Errc::internal_inconsistency: return ELLBENCH_EINTERNAL;
  }
  return ELLBENCH_EINTERNAL;
}

int set_error(const std::exception& e) {
  g_last_error = e.what();
  return ELLBENCH_EINTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return ELLBENCH_OK;
  } catch (const ellbench::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    return set_error(e);
  }
}

template <typename Fn>
char* guarded_string(Fn&& fn, int* err) {
  try {
    const std::string s = fn();
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
      if (err) *err = ELLBENCH_EINTERNAL;
      g_last_error = "out of memory";
      return nullptr;
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    if (err) *err = ELLBENCH_OK;
    return out;
  } catch (const ellbench::Error& e) {
    if (err) *err = set_error(e);
    return nullptr;
  } catch (const std::exception& e) {
    if (err) *err = set_error(e);
    return nullptr;
  }
}

ellbench::Variant bc_of(int bc) {
  if (bc == ELLBENCH_BC_DIRICHLET) return ellbench::Variant::dirichlet;
  if (bc == ELLBENCH_BC_ROBIN) return ellbench::Variant::robin;
  throw ellbench::Error(ellbench::Errc::invalid_argument, "unknown bc code");
}

ellbench::ControlKind kind_of(int problem) {
  switch (problem) {
    case ELLBENCH_PROBLEM_G: return ellbench::ControlKind::distributed;
    case ELLBENCH_PROBLEM_Q: return ellbench::ControlKind::flux;
    case ELLBENCH_PROBLEM_B: return ellbench::ControlKind::temperature;
    case ELLBENCH_PROBLEM_GQ: return ellbench::ControlKind::simultaneous;
  }
  throw ellbench::Error(ellbench::Errc::invalid_argument, "unknown problem code");
}

const ellbench::Problem& deref(const ellbench_problem* p) {
  if (!p)
    throw ellbench::Error(ellbench::Errc::invalid_argument, "null problem handle");
  return p->problem;
}

ellbench::AlphaGrid grid_of(const double alpha_grid[3]) {
  if (!alpha_grid)
    throw ellbench::Error(ellbench::Errc::invalid_argument, "null alpha grid");
  ellbench::AlphaGrid g;
  g.start = alpha_grid[0];
  g.stop = alpha_grid[1];
  g.points = static_cast<int>(alpha_grid[2]);
  return g;
}

} // namespace

extern "C" {

const char* ellbench_last_error(void) { return g_last_error.c_str(); }

int ellbench_problem_create(int domain, const double dims[2], const double data[4],
                            const double reg[5], ellbench_problem** out) {
  return guarded([&] {
    if (!dims || !data || !reg || !out)
      throw ellbench::Error(ellbench::Errc::invalid_argument, "null argument");
    ellbench::Geometry geom = [&] {
      switch (domain) {
        case ELLBENCH_DOMAIN_RECTANGLE: return ellbench::Geometry::rectangle(dims[0], dims[1]);
        case ELLBENCH_DOMAIN_ANNULUS: return ellbench::Geometry::annulus(dims[0], dims[1]);
        case ELLBENCH_DOMAIN_SHELL: return ellbench::Geometry::shell(dims[0], dims[1]);
      }
      throw ellbench::Error(ellbench::Errc::invalid_argument, "unknown domain code");
    }();
    ellbench::ProblemData pd;
    pd.g = data[0];
    pd.q = data[1];
    pd.b = data[2];
    pd.z_d = data[3];
    pd.m1 = reg[0];
    pd.m2 = reg[1];
    pd.m3 = reg[2];
    pd.m4 = reg[3];
    pd.m5 = reg[4];
    ellbench::validate(pd);
    *out = new ellbench_problem_s{{geom, pd}};
  });
}

int ellbench_problem_parse(const char* json_text, ellbench_problem** out) {
  return guarded([&] {
    if (!json_text || !out)
      throw ellbench::Error(ellbench::Errc::invalid_argument, "null argument");
    const ellbench::BenchConfig cfg = ellbench::parse_config(json_text);
    *out = new ellbench_problem_s{{cfg.geometry, cfg.data}};
  });
}

void ellbench_problem_free(ellbench_problem* p) { delete p; }

int ellbench_measures(const ellbench_problem* p, double* volume, double* gamma1,
                      double* gamma2) {
  return guarded([&] {
    const ellbench::Measures m = ellbench::domain_measures(deref(p).geometry);
    if (volume) *volume = m.volume;
    if (gamma1) *gamma1 = m.gamma1;
    if (gamma2) *gamma2 = m.gamma2;
  });
}

int ellbench_field(const ellbench_problem* p, int field, int bc, double alpha,
                   ellbench_profile** out) {
  return guarded([&] {
    if (!out) throw ellbench::Error(ellbench::Errc::invalid_argument, "null out");
    const auto& pr = deref(p);
    const ellbench::Variant var = bc_of(bc);
    ellbench::Profile prof = [&] {
      if (field == ELLBENCH_FIELD_STATE)
        return var == ellbench::Variant::dirichlet
                   ? ellbench::state_dirichlet(pr.geometry, pr.data)
                   : ellbench::state_robin(pr.geometry, pr.data, alpha);
      if (field == ELLBENCH_FIELD_ADJOINT)
        return var == ellbench::Variant::dirichlet
                   ? ellbench::adjoint_dirichlet(pr.geometry, pr.data)
                   : ellbench::adjoint_robin(pr.geometry, pr.data, alpha);
      throw ellbench::Error(ellbench::Errc::invalid_argument, "unknown field code");
    }();
    *out = new ellbench_profile_s{std::move(prof)};
  });
}

int ellbench_profile_interval(const ellbench_profile* f, double* lo, double* hi) {
  return guarded([&] {
    if (!f) throw ellbench::Error(ellbench::Errc::invalid_argument, "null profile");
    if (lo) *lo = f->profile.lower();
    if (hi) *hi = f->profile.upper();
  });
}

int ellbench_profile_eval(const ellbench_profile* f, double coord, double* value,
                          double* derivative) {
  return guarded([&] {
    if (!f) throw ellbench::Error(ellbench::Errc::invalid_argument, "null profile");
    if (value) *value = f->profile.value(coord);
    if (derivative) *derivative = f->profile.derivative(coord);
  });
}

int ellbench_profile_constant_count(const ellbench_profile* f) {
  return f ? static_cast<int>(f->profile.constants().size()) : 0;
}

int ellbench_profile_constant(const ellbench_profile* f, int index, char name[16],
                              double* value) {
  return guarded([&] {
    if (!f) throw ellbench::Error(ellbench::Errc::invalid_argument, "null profile");
    const auto& cs = f->profile.constants();
    if (index < 0 || index >= static_cast<int>(cs.size()))
      throw ellbench::Error(ellbench::Errc::invalid_argument, "constant index out of range");
    if (name) {
      std::strncpy(name, cs[index].first.c_str(), 15);
      name[15] = '\0';
    }
    if (value) *value = cs[index].second;
  });
}

void ellbench_profile_free(ellbench_profile* f) { delete f; }

int ellbench_coefficients(const ellbench_problem* p, int bc, double alpha, double k[6]) {
  return guarded([&] {
    if (!k) throw ellbench::Error(ellbench::Errc::invalid_argument, "null out");
    const auto& pr = deref(p);
    const ellbench::CoefficientSet c =
        bc_of(bc) == ellbench::Variant::dirichlet
            ? ellbench::dirichlet_coefficients(pr.geometry)
            : ellbench::robin_coefficients(pr.geometry, alpha);
    for (int i = 0; i < 6; ++i) k[i] = c.k[i];
  });
}

int ellbench_half_squared_misfit(const ellbench_problem* p, int bc, double alpha,
                                 double* out) {
  return guarded([&] {
    if (!out) throw ellbench::Error(ellbench::Errc::invalid_argument, "null out");
    const auto& pr = deref(p);
    *out = ellbench::half_squared_misfit(pr.geometry, pr.data, bc_of(bc), alpha);
  });
}

int ellbench_optimal(const ellbench_problem* p, int problem, int bc, double alpha,
                     double control[2], double* cost) {
  return guarded([&] {
    const auto& pr = deref(p);
    const ellbench::ControlSolution sol =
        ellbench::optimal_control(pr.geometry, pr.data, kind_of(problem), bc_of(bc), alpha);
    if (control) {
      control[0] = sol.control[0];
      control[1] = sol.control[1];
    }
    if (cost) *cost = sol.cost;
  });
}

int ellbench_cost(const ellbench_problem* p, int problem, int bc, double alpha,
                  const double control[2], double* out) {
  return guarded([&] {
    if (!control || !out)
      throw ellbench::Error(ellbench::Errc::invalid_argument, "null argument");
    const auto& pr = deref(p);
    *out = ellbench::evaluate_cost(pr.geometry, pr.data, kind_of(problem), control[0],
                                   control[1], bc_of(bc), alpha);
  });
}

int ellbench_limit_constant(const ellbench_problem* p, const char* quantity, double* out) {
  return guarded([&] {
    if (!quantity || !out)
      throw ellbench::Error(ellbench::Errc::invalid_argument, "null argument");
    const auto& pr = deref(p);
    const ellbench::LimitConstant lc = ellbench::closed_form_limit(
        pr.geometry, pr.data, ellbench::parse_quantity(quantity));
    if (!lc.has_closed_form)
      throw ellbench::Error(ellbench::Errc::invalid_argument,
                            "quantity has no tabulated closed-form limit");
    *out = lc.value;
  });
}

char* ellbench_solve_csv(const ellbench_problem* p, double alpha, int n, int* err) {
  return guarded_string(
      [&] { return ellbench::solve_csv(deref(p).geometry, deref(p).data, alpha, n); }, err);
}

char* ellbench_coeffs_json(const ellbench_problem* p, double alpha, int* err) {
  return guarded_string([&] { return ellbench::coeffs_json(deref(p).geometry, alpha); }, err);
}

char* ellbench_optimal_json(const ellbench_problem* p, int problem, int bc, double alpha,
                            int* err) {
  return guarded_string(
      [&] {
        return ellbench::optimal_json(deref(p).geometry, deref(p).data, kind_of(problem),
                                      bc_of(bc), alpha);
      },
      err);
}

char* ellbench_sweep_csv(const ellbench_problem* p, const char* quantity,
                         const double alpha_grid[3], int* err) {
  return guarded_string(
      [&] {
        if (!quantity)
          throw ellbench::Error(ellbench::Errc::invalid_argument, "null quantity");
        return ellbench::sweep_csv(deref(p).geometry, deref(p).data,
                                   ellbench::parse_quantity(quantity), grid_of(alpha_grid));
      },
      err);
}

char* ellbench_limits_json(const ellbench_problem* p, const double alpha_grid[3],
                           double limit_tol, int* err) {
  return guarded_string(
      [&] {
        return ellbench::limits_json(deref(p).geometry, deref(p).data, grid_of(alpha_grid),
                                     limit_tol);
      },
      err);
}

char* ellbench_verify_rows(const ellbench_problem* p, const double alpha_grid[3], int n,
                           char** table, int* status, int* err) {
  return guarded_string(
      [&] {
        ellbench::BenchConfig cfg;
        cfg.geometry = deref(p).geometry;
        cfg.data = deref(p).data;
        cfg.alphas = grid_of(alpha_grid);
        cfg.grid_n = n;
        const auto rows = ellbench::run_verification(cfg);
        if (status) *status = ellbench::all_rows_pass(rows) ? 0 : 1;
        if (table) {
          const std::string t = ellbench::verify_table(rows);
          *table = static_cast<char*>(std::malloc(t.size() + 1));
          if (*table) std::memcpy(*table, t.c_str(), t.size() + 1);
        }
        return ellbench::rows_csv(rows);
      },
      err);
}

char* ellbench_report_aggregate(const char* directory, char** summary_json, int* err) {
  return guarded_string(
      [&] {
        if (!directory)
          throw ellbench::Error(ellbench::Errc::invalid_argument, "null directory");
        const ellbench::AggregateReport rep = ellbench::aggregate_report(directory);
        if (summary_json) {
          *summary_json = static_cast<char*>(std::malloc(rep.summary_json.size() + 1));
          if (*summary_json)
            std::memcpy(*summary_json, rep.summary_json.c_str(), rep.summary_json.size() + 1);
        }
        return rep.csv;
      },
      err);
}

void ellbench_string_free(char* s) { std::free(s); }

} // extern "C"
