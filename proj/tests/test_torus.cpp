#include <cmath>
#include <numbers>

#include "doctest.h"
#include "steklov/error.hpp"
#include "steklov/torus.hpp"

using namespace steklov;
using namespace steklov::torus;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("Gaussian curvature of the ring torus") {
  const auto T = SurfaceOfRevolution::ring_torus(0.5);
  CHECK(gauss_curvature(T, 0.0) == Approx(4.0 / 3.0));
  CHECK(std::abs(gauss_curvature(T, pi / 2)) < 1e-15);
  CHECK(gauss_curvature(T, pi) == Approx(-4.0));
  // generic profile-curve formula agrees with the closed form
  const SurfaceOfRevolution generic([](double v) { return SurfaceOfRevolution::ring_torus(0.5).at(v); }, 0.0,
                                    2 * pi, true);
  for (double v : {0.1, 1.0, 2.0, 3.0, 4.5}) CHECK(gauss_curvature(generic, v) == Approx(gauss_curvature(T, v)));
  // round sphere of radius 2 via rho = 2 sin v, y = -2 cos v
  const SurfaceOfRevolution sphere(
      [](double v) {
        return ProfilePoint{2 * std::sin(v), 2 * std::cos(v), -2 * std::sin(v), 2 * std::sin(v), 2 * std::cos(v)};
      },
      0.0, pi, false);
  CHECK(gauss_curvature(sphere, 1.0) == Approx(0.25));
  CHECK_THROWS_AS(SurfaceOfRevolution::ring_torus(1.0), Error);
}

TEST_CASE("case profiles") {
  CHECK(case_profile(1)(0.7) == Approx(4.0 / 3.0));
  CHECK(case_profile(2)(0.0) == Approx(-4.0));
  CHECK(case_profile(2)(pi / 2) == Approx(4.0 / 3.0));
  const auto c3 = case_profile(3, pi / 2);
  CHECK(c3(0.9) == Approx(4.0 / 3.0));
  CHECK(c3.breakpoints() == std::vector<double>{pi / 4});
  CHECK(c3.is_continuous(1e-12));
  CHECK(c3(0.0) == Approx(gauss_curvature(SurfaceOfRevolution::ring_torus(0.5), pi / 2)));
  CHECK_THROWS_AS(case_profile(2, 0.0, 0.3), Error);
  CHECK_THROWS_AS(case_profile(3, 0.0), Error);
  CHECK_THROWS_AS(case_profile(4), Error);
  // every case profile exports to the config format
  for (int c = 1; c <= 3; ++c) CHECK(parse_profile_config(to_profile_config(case_profile(c, 1.0)))(0.3) ==
                                     case_profile(c, 1.0)(0.3));
}

TEST_CASE("reference constants") {
  auto k = escobar_reference_constant(2, pi / 4);
  CHECK(std::abs(k.k0) < 1e-12);
  CHECK(k.sign == CurvatureSign::Flat);
  k = escobar_reference_constant(2, pi / 3);
  CHECK(k.k0 == Approx(0.8));
  CHECK(k.sign == CurvatureSign::Spherical);
  CHECK(escobar_reference_constant(2, 0.1).sign == CurvatureSign::Hyperbolic);
  for (double r : {0.05, 0.4, 0.9, 1.3, 1.55}) {
    CHECK(case_profile(2)(r) == Approx(escobar_reference_constant(2, r).k0).epsilon(1e-14));
    CHECK(escobar_reference_constant(2, r).k0 == Approx(4 * std::cos(2 * r) / (-2 + std::cos(2 * r))));
  }
  CHECK(escobar_reference_constant(3, 0.6, pi / 2).k0 == Approx(case_profile(3, pi / 2)(0.6)));
  CHECK(escobar_reference_constant(3, 1.0, pi / 2).k0 == Approx(4.0 / 3.0));
  CHECK(escobar_reference_constant(1, 1.0).k0 == Approx(4.0 / 3.0));
  CHECK_THROWS_AS(escobar_reference_constant(2, 1.6), Error);
}

TEST_CASE("meridian geodesic from the inner equator") {
  const auto T = SurfaceOfRevolution::ring_torus(0.5);
  const auto end = shoot_geodesic(T, 0.0, pi, 0.0, 0.3);
  CHECK(end.v == Approx(pi + 0.6).epsilon(1e-12));
  CHECK(std::abs(end.u) < 1e-14);
  const auto back = shoot_geodesic(T, 0.0, pi, pi, 0.3);
  CHECK(back.v == Approx(pi - 0.6).epsilon(1e-12));
}

TEST_CASE("Clairaut constant is conserved") {
  const auto T = SurfaceOfRevolution::ring_torus(0.5);
  for (double theta : {0.3, 1.0, 1.5707963, 2.4})
    CHECK(shoot_geodesic(T, 0.0, 0.7, theta, 1.4).clairaut_drift <= 1e-8);
}

TEST_CASE("geodesic circle maxima") {
  const auto T = SurfaceOfRevolution::ring_torus(0.5);
  for (double t : {0.3, 0.6, 1.2}) {
    const auto m = geodesic_circle_max_curvature(T, BasePoint::inner_equator(), t);
    CHECK(std::abs(m.max_curvature - case_profile(2)(t)) <= 1e-3);
    CHECK(m.max_curvature <= case_profile(2)(t) + 1e-3);
    CHECK(m.clairaut_drift <= 1e-8);
  }
  const auto outer = geodesic_circle_max_curvature(T, BasePoint::outer_equator(), 0.5);
  CHECK(outer.max_curvature <= 4.0 / 3.0 + 1e-6);
  // small circles approach the curvature at the centre
  const auto tiny = geodesic_circle_max_curvature(T, BasePoint::generic(1.0), 1e-4);
  CHECK(tiny.max_curvature == Approx(gauss_curvature(T, 1.0)).epsilon(1e-3));
  CHECK_THROWS_AS(geodesic_circle_max_curvature(T, BasePoint::outer_equator(), 1.6), Error);
  CHECK_THROWS_AS(geodesic_circle_max_curvature(T, BasePoint::outer_equator(), 0.5, 8), Error);
}

TEST_CASE("case profiles bound the circle maxima") {
  const auto T = SurfaceOfRevolution::ring_torus(0.5);
  const double alpha = 1.0;
  for (double t : {0.2, 0.45, 0.8, 1.1, 1.4}) {
    CHECK(geodesic_circle_max_curvature(T, BasePoint::outer_equator(), t, 32).max_curvature <=
          case_profile(1)(t) + 1e-3);
    CHECK(geodesic_circle_max_curvature(T, BasePoint::inner_equator(), t, 32).max_curvature <=
          case_profile(2)(t) + 1e-3);
    CHECK(geodesic_circle_max_curvature(T, BasePoint::generic(alpha), t, 32).max_curvature <=
          case_profile(3, alpha)(t) + 1e-3);
  }
}
