#include <ellbench/problem.hpp>

#include <cmath>
#include <numbers>

namespace ellbench {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::constraint_violation, what);
}

void require_finite(double v, const char* name) {
  require(std::isfinite(v), std::string(name) + " must be finite");
}

} // namespace

const char* to_string(Domain d) {
  switch (d) {
    case Domain::rectangle: return "rectangle";
    case Domain::annulus: return "annulus";
    case Domain::shell: return "shell";
  }
  return "?";
}

const char* to_string(Variant v) {
  return v == Variant::dirichlet ? "dirichlet" : "robin";
}

const char* to_string(ControlKind k) {
  switch (k) {
    case ControlKind::distributed: return "g";
    case ControlKind::flux: return "q";
    case ControlKind::temperature: return "b";
    case ControlKind::simultaneous: return "gq";
  }
  return "?";
}

Geometry Geometry::rectangle(double x0, double y0) {
  require_finite(x0, "x0");
  require_finite(y0, "y0");
  require(x0 > 0.0, "rectangle requires x0 > 0");
  require(y0 > 0.0, "rectangle requires y0 > 0");
  return Geometry(Domain::rectangle, x0, y0);
}

Geometry Geometry::annulus(double r1, double r2) {
  require_finite(r1, "r1");
  require_finite(r2, "r2");
  require(r1 > 0.0, "annulus requires r1 > 0");
  require(r2 > r1, "annulus requires r1 < r2");
  return Geometry(Domain::annulus, r1, r2);
}

Geometry Geometry::shell(double r1, double r2) {
  require_finite(r1, "r1");
  require_finite(r2, "r2");
  require(r1 > 0.0, "shell requires r1 > 0");
  require(r2 > r1, "shell requires r1 < r2");
  return Geometry(Domain::shell, r1, r2);
}

double Geometry::x0() const {
  if (domain_ != Domain::rectangle)
    throw Error(Errc::invalid_argument, "x0 is defined for the rectangle only");
  return a_;
}

double Geometry::y0() const {
  if (domain_ != Domain::rectangle)
    throw Error(Errc::invalid_argument, "y0 is defined for the rectangle only");
  return b_;
}

double Geometry::r1() const {
  if (domain_ == Domain::rectangle)
    throw Error(Errc::invalid_argument, "r1 is defined for radial domains only");
  return a_;
}

double Geometry::r2() const {
  if (domain_ == Domain::rectangle)
    throw Error(Errc::invalid_argument, "r2 is defined for radial domains only");
  return b_;
}

double Geometry::lower() const noexcept {
  return domain_ == Domain::rectangle ? 0.0 : a_;
}

double Geometry::upper() const noexcept {
  return domain_ == Domain::rectangle ? a_ : b_;
}

double Geometry::volume_weight(double c) const noexcept {
  switch (domain_) {
    case Domain::rectangle: return b_; // y0
    case Domain::annulus: return 2.0 * std::numbers::pi * c;
    case Domain::shell: return 4.0 * std::numbers::pi * c * c;
  }
  return 0.0;
}

double Geometry::flux_weight(double c) const noexcept {
  switch (domain_) {
    case Domain::rectangle: return 1.0;
    case Domain::annulus: return c;
    case Domain::shell: return c * c;
  }
  return 0.0;
}

Measures domain_measures(const Geometry& geom) {
  const double pi = std::numbers::pi;
  switch (geom.domain()) {
    case Domain::rectangle:
      return {geom.x0() * geom.y0(), geom.y0(), geom.y0()};
    case Domain::annulus: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return {pi * (r2 * r2 - r1 * r1), 2.0 * pi * r1, 2.0 * pi * r2};
    }
    case Domain::shell: {
      const double r1 = geom.r1(), r2 = geom.r2();
      return {4.0 * pi * (r2 * r2 * r2 - r1 * r1 * r1) / 3.0, 4.0 * pi * r1 * r1,
              4.0 * pi * r2 * r2};
    }
  }
  throw Error(Errc::invalid_argument, "unknown domain");
}

void validate(const ProblemData& data) {
  require_finite(data.g, "g");
  require_finite(data.q, "q");
  require_finite(data.b, "b");
  require_finite(data.z_d, "z_d");
  const double m[5] = {data.m1, data.m2, data.m3, data.m4, data.m5};
  const char* names[5] = {"M1", "M2", "M3", "M4", "M5"};
  for (int i = 0; i < 5; ++i) {
    require_finite(m[i], names[i]);
    require(m[i] > 0.0, std::string(names[i]) + " must be strictly positive");
  }
}

double checked_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw Error(Errc::constraint_violation, "alpha must be finite and strictly positive");
  return alpha;
}

} // namespace ellbench
