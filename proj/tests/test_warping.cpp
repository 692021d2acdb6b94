#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "steklov/error.hpp"
#include "steklov/torus.hpp"
#include "steklov/warping.hpp"

using namespace steklov;
using doctest::Approx;
using std::numbers::pi;

namespace {
// Case-2 torus profile at t = 1, from warping_oracle with 2x20000 and 2x30000 RK4 steps
// (the two agree to 3e-15).
constexpr double kCase2FAt1 = 1.2822042895572752;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("flat profile gives f = t without a zero") {
  const auto w = solve_warping(CurvatureProfile::constant(0.0, 2.0), 2.0);
  CHECK(w.t_end() == 2.0);
  CHECK_FALSE(w.first_zero());
  for (double t : {0.1, 0.7, 1.3, 2.0}) CHECK(w.value(t) == Approx(t).epsilon(1e-12));
  CHECK(w.f_values()[0] == 0.0);
  CHECK(w.fprime_values()[0] == 1.0);
}

TEST_CASE("unit sphere: f = sin t truncated at pi") {
  const auto w = solve_warping(CurvatureProfile::constant(1.0, 4.0), 4.0);
  REQUIRE(w.first_zero());
  CHECK(std::abs(*w.first_zero() - pi) < 1e-9);
  CHECK(w.t_end() == *w.first_zero());
  for (double t : {0.5, 1.5, 3.0}) CHECK(std::abs(w.value(t) - std::sin(t)) < 1e-9);
}

TEST_CASE("hyperbolic plane: f = sinh t") {
  const auto w = solve_warping(CurvatureProfile::constant(-1.0, 3.0), 3.0);
  CHECK_FALSE(w.first_zero());
  CHECK(std::abs(w.value(3.0) - std::sinh(3.0)) < 1e-8 * std::sinh(3.0));
}

TEST_CASE("case-2 torus profile at t = 1 matches the oracle") {
  const auto w = solve_warping(torus::case_profile(2), 1.0, 1e-12);
  CHECK(std::abs(w.value(1.0) - kCase2FAt1) < 1e-10);
  // the oracle itself reproduces the frozen value
  const auto a = oracle::warping_oracle(oracle::case2_profile, 1.0, 4000);
  const auto b = oracle::warping_oracle(oracle::case2_profile, 1.0, 6000);
  CHECK(std::abs(a.f - b.f) < 1e-10);
  CHECK(std::abs(a.f - kCase2FAt1) < 1e-10);
}

TEST_CASE("space forms") {
  const auto s4 = space_form_warping(4.0);
  REQUIRE(s4.first_zero());
  CHECK(*s4.first_zero() == Approx(pi / 2).epsilon(1e-15));
  CHECK(s4.value(0.3) == Approx(std::sin(0.6) / 2).epsilon(1e-15));
  CHECK(space_form_warping(0.0).value(1.7) == 1.7);
  CHECK(space_form_warping(-1.0).value(1.0) == Approx(1.1752011936).epsilon(1e-10));
  CHECK(space_form_warping(-1.0).space_form_curvature() == -1.0);
  // dense evaluation reproduces node values
  const auto w = space_form_warping(1.0);
  for (std::size_t i = 0; i < w.grid().size(); i += 97) CHECK(w.value(w.grid()[i]) == w.f_values()[i]);
}

TEST_CASE("first_zero") {
  CHECK(*first_zero(space_form_warping(1.0, 4.0)) == Approx(pi).epsilon(1e-12));
  CHECK_FALSE(first_zero(space_form_warping(0.0, 4.0)));
  CHECK(*first_zero(space_form_warping(4.0)) == Approx(pi / 2).epsilon(1e-12));
}

TEST_CASE("huge curvature truncates at the first zero") {
  const auto w = solve_warping(CurvatureProfile::constant(1e9, 1.0), 1.0);
  REQUIRE(w.first_zero());
  CHECK(std::abs(*w.first_zero() - pi / std::sqrt(1e9)) < 1e-12);
}

TEST_CASE("normalization at the smallest step") {
  for (double k0 : {-2.0, 0.5, 4.0}) {
    const double tol = 1e-10;
    const auto w = solve_warping(CurvatureProfile::constant(k0, 1.0), 1.0, tol);
    double h = 1e300;
    std::size_t at = 1;
    for (std::size_t i = 1; i < w.grid().size(); ++i) {
      const double d = w.grid()[i] - w.grid()[i - 1];
      if (d < h) h = d, at = i;
    }
    CHECK(w.fprime_values()[0] == 1.0);
    CHECK(std::abs(w.f_values()[at] / w.grid()[at] - 1.0) <= 10 * tol + std::abs(k0) * h * h / 6);
    CHECK(std::abs(w.value(w.grid()[1]) / w.grid()[1] - 1.0) <= 10 * tol);
  }
}

TEST_CASE("interpolant residual f'' + k f at nodes") {
  for (double k0 : {-2.0, -1.0, 0.0, 1.0, 4.0}) {
    const auto w = solve_warping(CurvatureProfile::constant(k0, 3.0), 3.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < w.grid().size(); ++i) {
      const auto s = w.eval(w.grid()[i]);
      worst = std::max(worst, std::abs(s.fsecond + k0 * s.f));
    }
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("breakpoints are grid nodes") {
  const CurvatureProfile k({Piece{0.0, 0.4, ConstantPiece{1.0}}, Piece{0.4, 1.0, ConstantPiece{-1.0}}});
  const auto w = solve_warping(k, 1.0);
  bool found = false;
  for (double t : w.grid()) found = found || t == 0.4;
  CHECK(found);
  // exact solution: sin up to 0.4, then a sinh/cosh continuation
  const double f0 = std::sin(0.4), g0 = std::cos(0.4);
  const double exact = f0 * std::cosh(0.6) + g0 * std::sinh(0.6);
  CHECK(std::abs(w.value(1.0) - exact) < 1e-9);
}

TEST_CASE("solver argument checks") {
  const auto k = CurvatureProfile::constant(1.0, 2.0);
  CHECK(code_of([&] { solve_warping(k, 2.0, 1e-15); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_warping(k, 2.0, 0.1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_warping(k, 0.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_warping(k, 3.0); }) == ErrorCode::InvalidArgument);
  const auto bad = CurvatureProfile::from_function([](double t) { return t > 0.5 ? NAN : 1.0; }, 1.0);
  CHECK(code_of([&] { solve_warping(bad, 1.0); }) == ErrorCode::NonFiniteCurvature);
  const auto w = solve_warping(k, 2.0);
  CHECK(code_of([&] { w.eval(2.5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fixed-step reference mode is fourth order") {
  const auto k = CurvatureProfile::constant(1.0, 1.0);
  double prev = 0.0;
  for (std::size_t steps = 10; steps <= 80; steps *= 2) {
    const double err = std::abs(warping_fixed_step(k, 1.0, steps).f - std::sin(1.0));
    if (prev > 0.0) CHECK(prev / err >= 12.0);
    prev = err;
  }
}

TEST_CASE("Sturm-Picone comparison examples") {
  const auto flat = CurvatureProfile::constant(0.0, 1.0);
  const auto sphere = CurvatureProfile::constant(1.0, 1.0);
  const auto v = sturm_picone_compare(flat, sphere, 1.0);
  CHECK(v.ordering == Ordering::FirstGreater);
  CHECK(v.f1_at_r == Approx(1.0).epsilon(1e-12));
  CHECK(v.f2_at_r == Approx(0.8414709848).epsilon(1e-10));

  const auto same = sturm_picone_compare(sphere, sphere, 1.0);
  CHECK(same.ordering == Ordering::Equal);
  CHECK(std::abs(same.margin) <= 1e-10);

  const double ref = torus::escobar_reference_constant(2, 1.0).k0;
  const auto torus2 = sturm_picone_compare(torus::case_profile(2), CurvatureProfile::constant(ref, 1.0), 1.0);
  CHECK(torus2.ordering == Ordering::FirstGreater);
  CHECK(torus2.f1_at_r == Approx(kCase2FAt1).epsilon(1e-9));
  CHECK(torus2.margin == Approx(kCase2FAt1 - oracle::space_form_f(ref, 1.0)).epsilon(1e-8));

  CHECK(code_of([&] { sturm_picone_compare(CurvatureProfile::constant(16.0, 1.0), sphere, 1.0); }) ==
        ErrorCode::ZeroBeforeR);
}

TEST_CASE("Sturm-Picone monotonicity on random smooth pairs") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0), up(0.0, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = u(gen), b = u(gen), d = up(gen), e = up(gen);
    const auto k1 = CurvatureProfile::from_function([=](double t) { return a + b * std::sin(3 * t); }, 1.0);
    const auto k2 = CurvatureProfile::from_function(
        [=](double t) { return a + b * std::sin(3 * t) + d + e * t * t; }, 1.0);
    const auto v = sturm_picone_compare(k1, k2, 1.0);
    CHECK(v.f1_at_r >= v.f2_at_r - 1e-9);
    if (d + e / 3 > 1e-3) CHECK(v.ordering == Ordering::FirstGreater);
  }
}
