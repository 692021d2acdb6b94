#include "steklov/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "steklov/error.hpp"
#include "steklov/ode.hpp"

namespace steklov {

namespace {

/// Cut points of [a, b] at the warping breakpoints.
std::vector<double> cuts(const WarpingFunction& w, double a, double b) {
  std::vector<double> out{a};
  for (double k : w.breakpoints())
    if (k > a && k < b) out.push_back(k);
  out.push_back(b);
  return out;
}

template <class F>
double integrate(const WarpingFunction& w, double a, double b, F&& fn) {
  using boost::math::quadrature::gauss_kronrod;
  const auto pts = cuts(w, a, b);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += gauss_kronrod<double, 31>::integrate(fn, pts[i], pts[i + 1], 15, 1e-12);
  return total;
}

}  // namespace

ModelBall::ModelBall(int n, double r, WarpingFunction warping)
    : n_(n), r_(r), warping_(std::move(warping)) {
  if (n_ < 2) throw Error(ErrorCode::InvalidArgument, "model dimension must be >= 2");
  if (!(r_ > 0.0) || !std::isfinite(r_)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (const auto l = warping_.first_zero(); l && r_ >= *l)
    throw Error(ErrorCode::ZeroBeforeR, "radius reaches the first zero of the warping function");
  if (r_ > warping_.t_end())
    throw Error(ErrorCode::InvalidArgument, "warping function is not sampled up to r");
  const auto grid = warping_.grid();
  const auto f = warping_.f_values();
  for (std::size_t i = 1; i < grid.size() && grid[i] <= r_; ++i)
    if (!(f[i] > 0.0)) throw Error(ErrorCode::ZeroBeforeR, "warping function vanishes before r");
  if (!(warping_.value(r_) > 0.0))
    throw Error(ErrorCode::ZeroBeforeR, "warping function vanishes at r");
}

ModeLogDerivative steklov_mode_logderivative(const ModelBall& ball, int m, double tol) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "mode index must be >= 1");
  const int n = ball.n();
  const double r = ball.r();
  const double t0 = std::max(1e-6, 1e-4 * r);
  if (t0 >= 0.5 * r) throw Error(ErrorCode::OriginSingularity, "radius too small for the start offset");
  const double lambda = static_cast<double>(m) * (m + n - 2);
  const auto& w = ball.warping();

  // psi is carried as psi / t0^m so both components start at moderate size.
  auto rhs = [&](double t, const ode::State<2>& y) -> ode::State<2> {
    const auto s = w.eval(t);
    return {y[1], -(n - 1) * (s.fprime / s.f) * y[1] + lambda * y[0] / (s.f * s.f)};
  };
  ode::AdaptiveOptions opts;
  opts.rtol = 0.1 * tol;
  opts.atol = 1e-6 * tol;
  opts.initial_step = 0.05 * t0;

  ode::State<2> y{1.0, m / t0};
  std::size_t steps = 0;
  const auto pts = cuts(w, t0, r);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto res = ode::dopri5_segment<2>(rhs, pts[i], pts[i + 1], y, opts);
    y = res.y;
    steps += res.accepted;
    opts.initial_step = res.last_step;
  }
  if (!(y[0] > 0.0) || !std::isfinite(y[1]))
    throw Error(ErrorCode::PsiVanished, "regular radial solution lost positivity");

  const double scale = std::pow(t0, m);
  const double series = w.curvature_at_origin() * m * (2.0 * n + m - 3) / (6.0 * (2.0 * m + n));
  return {y[1] / y[0], y[0] * scale, y[1] * scale, steps, std::abs(series) * t0 * t0};
}

SteklovResult steklov_v1(const ModelBall& ball, int max_mode, double tol) {
  if (max_mode < 1) throw Error(ErrorCode::InvalidArgument, "max_mode must be >= 1");
  const double r = ball.r();
  if (ball.n() == 2) {
    // psi(t) = t exp(int_0^t (1/f - 1/s) ds) solves the mode-1 equation and
    // psi'/psi = 1/f.
    const auto& w = ball.warping();
    const double fr = w.value(r);
    const double log_excess =
        integrate(w, 0.0, r, [&w](double s) { return (s - w.value(s)) / (s * w.value(s)); });
    const double psi = r * std::exp(log_excess);
    SteklovResult res{1.0 / fr, 1, psi, psi / fr, {}};
    res.diagnostics.method = "closed-form-n2";
    return res;
  }
  SteklovResult best{};
  best.v1 = std::numeric_limits<double>::infinity();
  std::size_t steps = 0;
  for (int m = 1; m <= max_mode; ++m) {
    const auto mode = steklov_mode_logderivative(ball, m, tol);
    steps += mode.steps;
    if (mode.value < best.v1) {
      best.v1 = mode.value;
      best.mode = m;
      best.psi_at_r = mode.psi_at_r;
      best.psiprime_at_r = mode.psiprime_at_r;
      best.diagnostics.residual = mode.start_error;
    }
  }
  best.diagnostics.steps = steps;
  best.diagnostics.method = "radial-dopri5";
  return best;
}

double boundary_lambda1c(const ModelBall& ball) {
  const double fr = ball.f_at_r();
  return (ball.n() - 1) / (fr * fr);
}

double unit_sphere_measure(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be >= 0");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

VolumeArea ball_volume_and_area(const ModelBall& ball) {
  const int n = ball.n();
  const auto& w = ball.warping();
  const double omega = unit_sphere_measure(n);
  const double radial =
      integrate(w, 0.0, ball.r(), [&](double t) { return std::pow(w.value(t), n - 1); });
  return {omega * radial, omega * std::pow(ball.f_at_r(), n - 1)};
}

}  // namespace steklov
