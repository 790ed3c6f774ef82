#ifndef ELLBENCH_TESTS_FIXTURES_HPP
#define ELLBENCH_TESTS_FIXTURES_HPP

#include <random>

#include <ellbench/problem.hpp>

namespace fixtures {

// The fixed benchmark dataset the frozen reference values were computed at.
inline ellbench::ProblemData bench_data() {
  ellbench::ProblemData d;
  d.g = 1.1;
  d.q = 0.7;
  d.b = 0.9;
  d.z_d = 0.4;
  d.m1 = 0.9;
  d.m2 = 1.1;
  d.m3 = 0.8;
  d.m4 = 1.2;
  d.m5 = 0.7;
  return d;
}

inline ellbench::Geometry bench_rectangle() { return ellbench::Geometry::rectangle(1.3, 0.9); }
inline ellbench::Geometry bench_annulus() { return ellbench::Geometry::annulus(0.8, 1.9); }
inline ellbench::Geometry bench_shell() { return ellbench::Geometry::shell(0.7, 1.6); }

inline ellbench::Geometry bench_geometry(ellbench::Domain d) {
  switch (d) {
    case ellbench::Domain::rectangle: return bench_rectangle();
    case ellbench::Domain::annulus: return bench_annulus();
    default: return bench_shell();
  }
}

struct RandomProblems {
  std::mt19937 rng;
  explicit RandomProblems(unsigned seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  ellbench::Geometry geometry(ellbench::Domain d) {
    switch (d) {
      case ellbench::Domain::rectangle:
        return ellbench::Geometry::rectangle(uniform(0.5, 2.5), uniform(0.5, 2.5));
      case ellbench::Domain::annulus: {
        const double r1 = uniform(0.5, 1.5);
        return ellbench::Geometry::annulus(r1, r1 * uniform(1.3, 3.0));
      }
      default: {
        const double r1 = uniform(0.5, 1.5);
        return ellbench::Geometry::shell(r1, r1 * uniform(1.3, 3.0));
      }
    }
  }

  ellbench::ProblemData data() {
    ellbench::ProblemData d;
    d.g = uniform(-2.0, 2.0);
    d.q = uniform(-2.0, 2.0);
    d.b = uniform(-2.0, 2.0);
    d.z_d = uniform(-2.0, 2.0);
    d.m1 = uniform(0.2, 3.0);
    d.m2 = uniform(0.2, 3.0);
    d.m3 = uniform(0.2, 3.0);
    d.m4 = uniform(0.2, 3.0);
    d.m5 = uniform(0.2, 3.0);
    return d;
  }
};

} // namespace fixtures

#endif
