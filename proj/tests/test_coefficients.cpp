#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <ellbench/closed_form.hpp>
#include <ellbench/coefficients.hpp>
#include <ellbench/oracle.hpp>
#include "fixtures.hpp"
#include "reference_values.hpp"

using namespace ellbench;

TEST_CASE("rectangle Dirichlet table is exact") {
  const CoefficientSet c = dirichlet_coefficients(Geometry::rectangle(1.7, 0.4));
  CHECK(c.k[0] == 2.0 / 15.0);
  CHECK(c.k[1] == 1.0 / 3.0);
  CHECK(c.k[2] == 1.0);
  CHECK(c.k[3] == -5.0 / 12.0);
  CHECK(c.k[4] == 2.0 / 3.0);
  CHECK(c.k[5] == -1.0);
}

TEST_CASE("rectangle Robin table at alpha x0 = 1") {
  // k1 picks up 2/3 + 1, i.e. 27/15 in total.
  const CoefficientSet c = robin_coefficients(Geometry::rectangle(1.0, 1.0), 1.0);
  CHECK(c.k[0] == doctest::Approx(27.0 / 15.0).epsilon(1e-15));
  CHECK(c.k[2] == 1.0);
}

TEST_CASE("k3 ratio identities") {
  CHECK(dirichlet_coefficients(Geometry::annulus(1.0, 2.0)).k[2] == doctest::Approx(1.5));
  CHECK(dirichlet_coefficients(Geometry::shell(1.0, 2.0)).k[2] ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("k3 of the Robin variant equals the Dirichlet k3 exactly") {
  for (Domain dom : {Domain::rectangle, Domain::annulus, Domain::shell}) {
    const Geometry geom = fixtures::bench_geometry(dom);
    const double k3 = dirichlet_coefficients(geom).k[2];
    for (double alpha : {0.5, 3.0, 1e2, 1e6})
      CHECK(robin_coefficients(geom, alpha).k[2] == k3);
  }
}

TEST_CASE("frozen coefficient values at alpha = 7.3") {
  const CoefficientSet cr = robin_coefficients(fixtures::bench_rectangle(), 7.3);
  CHECK(cr.k[0] == doctest::Approx(refs::rect_C1a_at_7_3).epsilon(1e-15));
  CHECK(cr.k[1] == doctest::Approx(refs::rect_C2a_at_7_3).epsilon(1e-15));
  CHECK(cr.k[2] == 1.0);
  CHECK(cr.k[3] == doctest::Approx(refs::rect_C4a_at_7_3).epsilon(1e-15));
  CHECK(cr.k[4] == doctest::Approx(refs::rect_C5a_at_7_3).epsilon(1e-15));
  CHECK(cr.k[5] == doctest::Approx(refs::rect_C6a_at_7_3).epsilon(1e-15));

  const CoefficientSet ed = dirichlet_coefficients(fixtures::bench_annulus());
  const CoefficientSet ea = robin_coefficients(fixtures::bench_annulus(), 7.3);
  const double e_dir[6] = {refs::annu_E1, refs::annu_E2, refs::annu_E3,
                           refs::annu_E4, refs::annu_E5, refs::annu_E6};
  const double e_rob[6] = {refs::annu_E1a_at_7_3, refs::annu_E2a_at_7_3,
                           refs::annu_E3a_at_7_3, refs::annu_E4a_at_7_3,
                           refs::annu_E5a_at_7_3, refs::annu_E6a_at_7_3};
  for (int i = 0; i < 6; ++i) {
    CHECK(ed.k[i] == doctest::Approx(e_dir[i]).epsilon(1e-14));
    CHECK(ea.k[i] == doctest::Approx(e_rob[i]).epsilon(1e-14));
  }

  const CoefficientSet gd = dirichlet_coefficients(fixtures::bench_shell());
  const CoefficientSet ga = robin_coefficients(fixtures::bench_shell(), 7.3);
  const double g_dir[6] = {refs::shel_G1, refs::shel_G2, refs::shel_G3,
                           refs::shel_G4, refs::shel_G5, refs::shel_G6};
  const double g_rob[6] = {refs::shel_G1a_at_7_3, refs::shel_G2a_at_7_3,
                           refs::shel_G3a_at_7_3, refs::shel_G4a_at_7_3,
                           refs::shel_G5a_at_7_3, refs::shel_G6a_at_7_3};
  for (int i = 0; i < 6; ++i) {
    CHECK(gd.k[i] == doctest::Approx(g_dir[i]).epsilon(1e-14));
    CHECK(ga.k[i] == doctest::Approx(g_rob[i]).epsilon(1e-14));
  }
}

TEST_CASE("half_squared_misfit trivial and frozen cases") {
  ProblemData zero;
  zero.b = 1.0;
  zero.z_d = 1.0;
  for (Domain dom : {Domain::rectangle, Domain::annulus, Domain::shell})
    CHECK(half_squared_misfit(fixtures::bench_geometry(dom), zero, Variant::dirichlet) ==
          doctest::Approx(0.0).epsilon(1e-300));

  ProblemData unit;
  unit.b = 1.0;
  CHECK(half_squared_misfit(Geometry::rectangle(1.0, 1.0), unit, Variant::dirichlet) ==
        doctest::Approx(0.5).epsilon(1e-15));

  const ProblemData d = fixtures::bench_data();
  CHECK(half_squared_misfit(fixtures::bench_rectangle(), d, Variant::dirichlet) ==
        doctest::Approx(refs::rect_halfmisfit_dir).epsilon(1e-14));
  CHECK(half_squared_misfit(fixtures::bench_rectangle(), d, Variant::robin, 50.0) ==
        doctest::Approx(refs::rect_halfmisfit_rob_at_50).epsilon(1e-14));
  CHECK(half_squared_misfit(fixtures::bench_annulus(), d, Variant::dirichlet) ==
        doctest::Approx(refs::annu_halfmisfit_dir).epsilon(1e-14));
  CHECK(half_squared_misfit(fixtures::bench_annulus(), d, Variant::robin, 50.0) ==
        doctest::Approx(refs::annu_halfmisfit_rob_at_50).epsilon(1e-14));
  CHECK(half_squared_misfit(fixtures::bench_shell(), d, Variant::dirichlet) ==
        doctest::Approx(refs::shel_halfmisfit_dir).epsilon(1e-14));
  CHECK(half_squared_misfit(fixtures::bench_shell(), d, Variant::robin, 50.0) ==
        doctest::Approx(refs::shel_halfmisfit_rob_at_50).epsilon(1e-14));
}

TEST_CASE("table equals quadrature of the squared misfit") {
  fixtures::RandomProblems rnd(99);
  for (Domain dom : {Domain::rectangle, Domain::annulus, Domain::shell}) {
    for (int i = 0; i < 8; ++i) {
      const Geometry geom = rnd.geometry(dom);
      const ProblemData d = rnd.data();
      const double alpha = rnd.uniform(0.5, 1e3);
      for (Variant var : {Variant::dirichlet, Variant::robin}) {
        const Profile u = var == Variant::dirichlet ? state_dirichlet(geom, d)
                                                    : state_robin(geom, d, alpha);
        const double table = half_squared_misfit(geom, d, var, alpha);
        const double quad = 0.5 * weighted_l2_auto(
                                      geom, [&](double c) { return u.value(c) - d.z_d; });
        CHECK(table == doctest::Approx(quad).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("Robin tables converge to Dirichlet tables at rate 1/alpha") {
  for (Domain dom : {Domain::rectangle, Domain::annulus, Domain::shell}) {
    const Geometry geom = fixtures::bench_geometry(dom);
    const CoefficientSet dir = dirichlet_coefficients(geom);
    for (int i = 0; i < 6; ++i) {
      if (i == 2) continue; // k3 gap is identically zero
      const double gap3 = std::abs(robin_coefficients(geom, 1e3).k[i] - dir.k[i]);
      const double gap4 = std::abs(robin_coefficients(geom, 1e4).k[i] - dir.k[i]);
      const double gap5 = std::abs(robin_coefficients(geom, 1e5).k[i] - dir.k[i]);
      // ratio approaches 10 once the 1/alpha term dominates
      CHECK(gap3 / gap4 == doctest::Approx(10.0).epsilon(2e-3));
      CHECK(gap4 / gap5 == doctest::Approx(10.0).epsilon(2e-4));
      // alpha*gap extrapolates to the linear-term coefficient
      const double lin5 = 1e5 * gap5;
      const double lin4 = 1e4 * gap4;
      CHECK(std::abs(lin4 - lin5) <= 2e-4 * std::abs(lin5) + 1e-12);
    }
  }
}

TEST_CASE("single-control quadratics are positive definite") {
  // k1, k2 > 0 over a range of radius ratios; geometry-independent for the
  // rectangle.
  CHECK(dirichlet_coefficients(Geometry::rectangle(1.0, 1.0)).k[0] > 0.0);
  CHECK(dirichlet_coefficients(Geometry::rectangle(1.0, 1.0)).k[1] > 0.0);
  for (double ratio : {1.05, 1.3, 2.0, 3.5, 5.0}) {
    for (Domain dom : {Domain::annulus, Domain::shell}) {
      const Geometry geom = dom == Domain::annulus ? Geometry::annulus(1.0, ratio)
                                                   : Geometry::shell(1.0, ratio);
      const CoefficientSet c = dirichlet_coefficients(geom);
      CHECK(c.k[0] > 0.0);
      CHECK(c.k[1] > 0.0);
    }
  }
}

TEST_CASE("negative-misfit guard") {
  // A corrupted coefficient set cannot be produced through the public
  // surface; the guard is exercised through the assembled value being a
  // squared norm for admissible inputs.
  fixtures::RandomProblems rnd(5);
  for (int i = 0; i < 20; ++i) {
    const Geometry geom = rnd.geometry(Domain::shell);
    CHECK(half_squared_misfit(geom, rnd.data(), Variant::dirichlet) >= 0.0);
  }
}
