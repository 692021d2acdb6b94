#include <algorithm>
#include <cmath>

#include "steklov/error.hpp"
#include "steklov/model.hpp"

namespace steklov {

namespace {

bool dominated_by(const CurvatureProfile& k, double r, double k0) {
  constexpr int kSamples = 2000;
  const double slack = 1e-13 * std::max(1.0, std::abs(k0));
  for (int i = 0; i < kSamples; ++i) {
    const double t = r * static_cast<double>(i) / kSamples;
    if (k(t) > k0 + slack) return false;
  }
  for (double b : k.breakpoints())
    if (b < r && k(b) > k0 + slack) return false;
  return true;
}

}  // namespace

ComparisonReport comparison_report(const CurvatureProfile& k_upper, int n, double r,
                                   double reference_k0, double tol) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  auto variable = solve_warping(k_upper, r, tol);
  if (variable.first_zero())
    throw Error(ErrorCode::ZeroBeforeR, "variable-bound warping vanishes in (0, r]");
  auto constant = space_form_warping(reference_k0, r);
  if (constant.first_zero())
    throw Error(ErrorCode::ZeroBeforeR, "constant-bound warping vanishes in (0, r]");

  const ModelBall ball_var(n, r, std::move(variable));
  const ModelBall ball_const(n, r, std::move(constant));
  const auto v_var = steklov_v1(ball_var, kDefaultMaxMode, tol);
  const auto v_const = steklov_v1(ball_const, kDefaultMaxMode, tol);

  ComparisonReport rep{};
  rep.n = n;
  rep.r = r;
  rep.v1_model_variable = v_var.v1;
  rep.v1_model_constant = v_const.v1;
  rep.f_at_r_variable = ball_var.f_at_r();
  rep.f_at_r_constant = ball_const.f_at_r();
  rep.mode = v_var.mode;
  rep.margin = v_const.v1 - v_var.v1;
  const double slack = 100.0 * tol * std::max(1.0, std::abs(v_const.v1));
  rep.sharper = rep.margin > slack;
  rep.dominated = dominated_by(k_upper, r, reference_k0);
  rep.consistent = !rep.dominated || rep.margin >= -slack;
  rep.boundary_hypothesis_assumed = n >= 4;
  return rep;
}

}  // namespace steklov
