#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "steklov/error.hpp"
#include "steklov/wentzell.hpp"

using namespace steklov;
using namespace steklov::wentzell;
using doctest::Approx;

TEST_CASE("upper bound examples") {
  CHECK(upper_bound({2, 2.0, 1.0, 3.0, 0.0}) == Approx(1.0).epsilon(1e-15));
  CHECK(upper_bound({2, 8.0, 2.0, 3.0, 0.0}) == Approx(2.0).epsilon(1e-15));
  CHECK(upper_bound({2, 3.0, 1.0, 3.0, 0.0}) == Approx(2.3660254037844386).epsilon(1e-15));
  CHECK(upper_bound({2, 2.0, 1.0, 3.0, 0.7}) == Approx(2.4).epsilon(1e-15));
  CHECK(euclidean_ball_eigenvalue(2, 1.0, 0.7) == Approx(2.4));
  try {
    upper_bound({2, 1.9, 1.0, 3.0, 0.0});
    FAIL("expected InvalidRadicand");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRadicand);
  }
}

TEST_CASE("lower bound examples") {
  CHECK(lower_bound({2, 1.0, 3.0, 5.0, 0.0}).value == 1.5);
  CHECK(lower_bound({2, 1.0, 1.0, 3.0, 1.0}).value == Approx(2.7247448714).epsilon(1e-10));
  CHECK(lower_bound({3, 1.0, 2.0, 4.0, 0.0}).value == 1.0);
  CHECK(lower_bound({3, 1.0, 2.0, 4.0, 0.0}).strict);
}

TEST_CASE("lambda1c floor") {
  CHECK(lambda1c_floor(1.0, 3.0).value == 2.0);
  CHECK(lambda1c_floor(0.5, 4.0).value == 0.75);
  CHECK(lambda1c_floor(1.0, 5.0).value == 4.0);
  CHECK(std::string(lambda1c_floor(1.0, 3.0).equality_case).find("Euclidean ball") != std::string::npos);
}

TEST_CASE("consistency report") {
  auto r = consistency_report({2, 2.0, 1.0, 3.0, 0.0});
  CHECK(r.lower == 0.5);
  CHECK(r.upper == Approx(1.0));
  CHECK(r.gap == Approx(0.5));
  CHECK(r.valid);
  CHECK(r.degenerate_sandwich);
  r = consistency_report({2, 2.0, 1.0, 3.0, 1.0});
  CHECK(r.upper == Approx(3.0));
  CHECK(r.gap == Approx(0.2752551286).epsilon(1e-9));
  CHECK_FALSE(r.degenerate_sandwich);
  CHECK_THROWS_AS(consistency_report({2, 1.9, 1.0, 3.0, 0.0}), Error);
}

TEST_CASE("setting validation") {
  CHECK_THROWS_AS(validate({2, 2.0, 0.0, 3.0, 0.0}), Error);
  CHECK_THROWS_AS(validate({2, 2.0, 1.0, 2.5, 0.0}), Error);
  CHECK_THROWS_AS(validate({2, 2.0, 1.0, 3.0, -0.1}), Error);
  CHECK_THROWS_AS(validate({2, 0.0, 1.0, 3.0, 0.0}), Error);
  CHECK_NOTHROW(validate({2, 2.0, 1.0, 3.0, 0.0}));
}

TEST_CASE("random settings: beta = 0 reduction, monotonicity, sandwich") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> uc(0.1, 5.0), ub(0.0, 10.0), ul(1.0, 10.0);
  std::uniform_int_distribution<int> un(1, 6);
  for (int i = 0; i < 1000; ++i) {
    const int n = un(gen);
    std::uniform_real_distribution<double> uk(n + 1.0, 12.0);
    Setting s{n, 0.0, uc(gen), uk(gen), ub(gen)};
    const double floor = (s.K - 1) * s.c * s.c;
    s.lambda1c = floor * ul(gen);
    // beta = 0 gives the Steklov estimate
    Setting s0 = s;
    s0.beta = 0.0;
    const double steklov = std::sqrt(s.lambda1c) * (std::sqrt(s.lambda1c) + std::sqrt(s.lambda1c - floor)) /
                           ((s.K - 1) * s.c);
    CHECK(upper_bound(s0) == Approx(steklov).epsilon(1e-14));
    // both bounds increase with beta
    Setting s1 = s;
    s1.beta += 1e-3;
    CHECK(upper_bound(s1) > upper_bound(s));
    CHECK(lower_bound(s1).value > lower_bound(s).value);
    CHECK(lower_bound(s).value < upper_bound(s));
  }
}

TEST_CASE("batch CSV") {
  std::istringstream in("n,lambda1c,c,K,beta\n2,2,1,3,0\n2,1.9,1,3,0\n2,2,0,3,0\n\n");
  std::ostringstream out;
  const auto summary = run_batch(in, out);
  CHECK(summary.rows == 3);
  CHECK(summary.invalid == 2);
  CHECK(out.str() ==
        "n,lambda1c,c,K,beta,lower,upper,gap,valid,status\n"
        "2,2,1,3,0,0.5,1.0000000000000002,0.50000000000000022,1,ok\n"
        "2,1.8999999999999999,1,3,0,0.5,,,0,invalid_radicand\n"
        "2,2,0,3,0,,,,0,invalid_setting\n");
  std::istringstream bad_header("n,c,K\n");
  CHECK_THROWS_AS(run_batch(bad_header, out), Error);
  std::istringstream bad_row("n,lambda1c,c,K,beta\n2,x,1,3,0\n");
  CHECK_THROWS_AS(run_batch(bad_row, out), Error);
}
