#include "steklov/warping.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "hermite.hpp"
#include "steklov/error.hpp"
#include "steklov/ode.hpp"

namespace steklov {

namespace {

constexpr std::size_t kSpaceFormNodes = 1025;

detail::HermiteValue interpolate(std::span<const double> grid, std::span<const double> f,
                                 std::span<const double> fp, const std::vector<double>& fpp_right,
                                 const std::vector<double>& fpp_left, std::size_t i, double t) {
  return detail::quintic_hermite(grid[i], grid[i + 1], {f[i], fp[i], fpp_right[i]},
                                 {f[i + 1], fp[i + 1], fpp_left[i + 1]}, t);
}

double refine_zero(const std::function<double(double)>& g, double a, double b) {
  const double ga = g(a), gb = g(b);
  if (gb == 0.0) return b;
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (lo + hi);
}

}  // namespace

WarpingFunction::Sample WarpingFunction::eval(double t) const {
  if (!(t >= 0.0) || t > t_end())
    throw Error(ErrorCode::InvalidArgument, "warping evaluated outside [0, t_end]");
  if (space_form_) {
    const double k0 = *space_form_;
    if (k0 > 0.0) {
      const double s = std::sqrt(k0);
      return {std::sin(s * t) / s, std::cos(s * t), -s * std::sin(s * t)};
    }
    if (k0 < 0.0) {
      const double s = std::sqrt(-k0);
      return {std::sinh(s * t) / s, std::cosh(s * t), s * std::sinh(s * t)};
    }
    return {t, 1.0, 0.0};
  }
  auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  std::size_t i = it == grid_.begin() ? 0 : static_cast<std::size_t>(it - grid_.begin()) - 1;
  if (i + 1 >= grid_.size()) {
    i = grid_.size() - 1;
    return {f_[i], fp_[i], fpp_left_[i]};
  }
  if (t == grid_[i]) return {f_[i], fp_[i], fpp_right_[i]};
  const auto v = interpolate(grid_, f_, fp_, fpp_right_, fpp_left_, i, t);
  return {v.f, v.fp, v.fpp};
}

WarpingFunction solve_warping(const CurvatureProfile& k, double t_max, double tol) {
  if (!(tol > 1e-14 && tol < 1e-2))
    throw Error(ErrorCode::InvalidArgument, "tolerance must lie in (1e-14, 1e-2)");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw Error(ErrorCode::InvalidArgument, "t_max must be positive and finite");
  if (t_max > k.t_max() * (1.0 + 1e-12))
    throw Error(ErrorCode::InvalidArgument, "curvature profile does not cover [0, t_max]");
  t_max = std::min(t_max, k.t_max());

  WarpingFunction w;
  w.k_origin_ = k(0.0);
  w.breakpoints_ = k.breakpoints();
  std::erase_if(w.breakpoints_, [&](double b) { return b >= t_max; });
  w.grid_ = {0.0};
  w.f_ = {0.0};
  w.fp_ = {1.0};
  w.fpp_left_ = {0.0};
  w.fpp_right_ = {0.0};

  ode::AdaptiveOptions opts;
  opts.rtol = tol;
  opts.atol = 1e-2 * tol;
  // The first step is kept small enough that f(h)/h reproduces f'(0) = 1
  // (the quotient deviates by k(0) h^2 / 6).
  double h_next = std::sqrt(6.0 * tol / (std::abs(w.k_origin_) + 1.0));

  ode::State<2> y{0.0, 1.0};
  bool crossed = false;
  for (const auto& seg : k.segments(t_max)) {
    auto rhs = [&k, piece = seg.piece](double t, const ode::State<2>& s) -> ode::State<2> {
      return {s[1], -k.eval_piece(piece, t) * s[0]};
    };
    opts.initial_step = std::min(h_next, seg.t_to - seg.t_from);
    bool first_step = true;
    auto res = ode::dopri5_segment<2>(rhs, seg.t_from, seg.t_to, y, opts,
                                      [&](const ode::Step<2>& st) {
                                        if (first_step) {
                                          w.fpp_right_.back() = st.dy0[1];
                                          first_step = false;
                                        }
                                        w.grid_.push_back(st.t1);
                                        w.f_.push_back(st.y1[0]);
                                        w.fp_.push_back(st.y1[1]);
                                        w.fpp_left_.push_back(st.dy1[1]);
                                        w.fpp_right_.push_back(st.dy1[1]);
                                        return st.y1[0] > 0.0;
                                      });
    w.steps_ += res.accepted;
    h_next = std::max(res.last_step, 1e-3 * tol);
    y = res.y;
    if (res.stopped) {
      crossed = true;
      break;
    }
  }

  if (crossed) {
    const std::size_t i = w.grid_.size() - 2;
    auto g = [&](double t) {
      return interpolate(w.grid_, w.f_, w.fp_, w.fpp_right_, w.fpp_left_, i, t).f;
    };
    const double l = refine_zero(g, w.grid_[i], w.grid_[i + 1]);
    const double fp_l = interpolate(w.grid_, w.f_, w.fp_, w.fpp_right_, w.fpp_left_, i, l).fp;
    if (l <= w.grid_[i]) {
      w.grid_.pop_back();
      w.f_.pop_back();
      w.fp_.pop_back();
      w.fpp_left_.pop_back();
      w.fpp_right_.pop_back();
    } else {
      w.grid_.back() = l;
    }
    w.f_.back() = 0.0;
    w.fp_.back() = fp_l;
    w.fpp_left_.back() = 0.0;
    w.fpp_right_.back() = 0.0;
    w.first_zero_ = w.grid_.back();
  }
  return w;
}

WarpingFunction space_form_warping(double k0, std::optional<double> t_max) {
  if (!std::isfinite(k0)) throw Error(ErrorCode::InvalidArgument, "space-form curvature not finite");
  if (t_max && !(*t_max > 0.0 && std::isfinite(*t_max)))
    throw Error(ErrorCode::InvalidArgument, "t_max must be positive and finite");
  WarpingFunction w;
  w.space_form_ = k0;
  w.k_origin_ = k0;
  double end = t_max.value_or(10.0);
  if (k0 > 0.0) {
    const double l = std::numbers::pi / std::sqrt(k0);
    if (!t_max || *t_max >= l) {
      end = l;
      w.first_zero_ = l;
    }
  }
  w.grid_.resize(kSpaceFormNodes);
  w.f_.resize(kSpaceFormNodes);
  w.fp_.resize(kSpaceFormNodes);
  w.fpp_left_.resize(kSpaceFormNodes);
  for (std::size_t i = 0; i < kSpaceFormNodes; ++i) {
    const double t = end * static_cast<double>(i) / static_cast<double>(kSpaceFormNodes - 1);
    w.grid_[i] = t;
  }
  w.grid_.back() = end;
  for (std::size_t i = 0; i < kSpaceFormNodes; ++i) {
    const auto s = w.eval(w.grid_[i]);
    w.f_[i] = s.f;
    w.fp_[i] = s.fprime;
    w.fpp_left_[i] = s.fsecond;
  }
  if (w.first_zero_) {
    w.f_.back() = 0.0;
    w.fpp_left_.back() = 0.0;
  }
  w.fpp_right_ = w.fpp_left_;
  return w;
}

std::optional<double> first_zero(const WarpingFunction& w) {
  if (w.first_zero()) return w.first_zero();
  const auto grid = w.grid();
  const auto f = w.f_values();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (f[i] > 0.0) continue;
    if (f[i] == 0.0) return grid[i];
    return refine_zero([&w](double t) { return w.value(t); }, grid[i - 1], grid[i]);
  }
  return std::nullopt;
}

WarpingFunction::Sample warping_fixed_step(const CurvatureProfile& k, double t, std::size_t steps) {
  if (!(t > 0.0) || t > k.t_max() || steps == 0)
    throw Error(ErrorCode::InvalidArgument, "fixed-step reference: bad interval or step count");
  ode::State<2> y{0.0, 1.0};
  std::size_t piece = 0;
  for (const auto& seg : k.segments(t)) {
    piece = seg.piece;
    auto rhs = [&k, piece](double s, const ode::State<2>& v) -> ode::State<2> {
      return {v[1], -k.eval_piece(piece, s) * v[0]};
    };
    const auto n = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(steps) * (seg.t_to - seg.t_from) / t)));
    y = ode::rk4_fixed<2>(rhs, seg.t_from, seg.t_to, y, n);
  }
  return {y[0], y[1], -k.eval_piece(piece, t) * y[0]};
}

ComparisonVerdict sturm_picone_compare(const CurvatureProfile& k1, const CurvatureProfile& k2,
                                       double r, double tol) {
  const auto w1 = solve_warping(k1, r, tol);
  const auto w2 = solve_warping(k2, r, tol);
  if (w1.first_zero() || w2.first_zero())
    throw Error(ErrorCode::ZeroBeforeR, "a warping function vanishes in (0, r]");
  ComparisonVerdict v;
  v.f1_at_r = w1.value(r);
  v.f2_at_r = w2.value(r);
  v.margin = v.f1_at_r - v.f2_at_r;
  const double equal_tol = 10.0 * tol * std::max({1.0, std::abs(v.f1_at_r), std::abs(v.f2_at_r)});
  if (std::abs(v.margin) <= equal_tol)
    v.ordering = Ordering::Equal;
  else
    v.ordering = v.margin > 0.0 ? Ordering::FirstGreater : Ordering::SecondGreater;
  return v;
}

}  // namespace steklov
