#pragma once

// Explicit Runge-Kutta integrators used by the warping, radial Steklov and
// geodesic solvers. Both work on one smooth segment at a time; callers split
// the integration interval at points where the right-hand side loses
// smoothness.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>

#include "steklov/error.hpp"

namespace steklov::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct AdaptiveOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// 0 selects a starting step from the initial derivative.
  double initial_step = 0.0;
  std::size_t max_steps = 2'000'000;
};

/// One accepted step, handed to the observer. `dy0`/`dy1` are the
/// right-hand side at the two ends (FSAL), enough for Hermite dense output.
template <std::size_t N>
struct Step {
  double t0, t1;
  State<N> y0, y1;
  State<N> dy0, dy1;
};

template <std::size_t N>
struct SegmentResult {
  double t = 0.0;
  State<N> y{};
  State<N> dy{};
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  bool stopped = false;  ///< observer asked to stop before t1
  double last_step = 0.0;
};

namespace detail {

template <std::size_t N>
inline State<N> axpy(const State<N>& y, double h,
                     std::initializer_list<std::pair<double, const State<N>*>> terms) {
  State<N> out = y;
  for (const auto& [c, k] : terms) {
    if (c == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i) out[i] += h * c * (*k)[i];
  }
  return out;
}

template <std::size_t N>
inline bool all_finite(const State<N>& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace detail

/// Dormand-Prince 5(4) with FSAL and a standard I-controller.
/// `rhs(t, y)` returns dy/dt; `observer(step)` returns false to stop after
/// that step. The segment end `t1` is hit exactly.
template <std::size_t N, class Rhs, class Observer>
SegmentResult<N> dopri5_segment(Rhs&& rhs, double t0, double t1, const State<N>& y0,
                                const AdaptiveOptions& opts, Observer&& observer) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  SegmentResult<N> res;
  res.t = t0;
  res.y = y0;
  const double span = t1 - t0;
  if (!(span > 0.0)) {
    res.dy = rhs(t0, y0);
    return res;
  }

  State<N> k1 = rhs(t0, y0);
  double h = opts.initial_step;
  if (h <= 0.0) {
    double ynorm = 0.0, dnorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opts.atol + opts.rtol * std::abs(y0[i]);
      ynorm = std::max(ynorm, std::abs(y0[i]) / sc);
      dnorm = std::max(dnorm, std::abs(k1[i]) / sc);
    }
    h = (ynorm < 1e-5 || dnorm < 1e-5) ? 1e-6 * span : 0.01 * ynorm / dnorm;
    h = std::min(h, 0.01 * span);
  }
  const double h_min = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t0), std::abs(t1));

  double t = t0;
  State<N> y = y0;
  while (t < t1) {
    if (res.accepted + res.rejected >= opts.max_steps)
      throw Error(ErrorCode::ToleranceUnachievable, "ODE step budget exhausted");
    bool last = false;
    if (t + h >= t1 || t + 1.01 * h >= t1) {
      h = t1 - t;
      last = true;
    }
    if (h < h_min && !last)
      throw Error(ErrorCode::ToleranceUnachievable,
                  "ODE step size underflow at t = " + std::to_string(t));

    using detail::axpy;
    const State<N> k2 = rhs(t + c2 * h, axpy<N>(y, h, {{a21, &k1}}));
    const State<N> k3 = rhs(t + c3 * h, axpy<N>(y, h, {{a31, &k1}, {a32, &k2}}));
    const State<N> k4 = rhs(t + c4 * h, axpy<N>(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State<N> k5 =
        rhs(t + c5 * h, axpy<N>(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const double t_new = last ? t1 : t + h;
    const State<N> k6 =
        rhs(t_new, axpy<N>(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State<N> y_new =
        axpy<N>(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State<N> k7 = rhs(t_new, y_new);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (!std::isfinite(err) || !detail::all_finite(y_new)) err = 1e10;

    if (err <= 1.0) {
      Step<N> step{t, t_new, y, y_new, k1, k7};
      t = t_new;
      y = y_new;
      k1 = k7;
      ++res.accepted;
      res.last_step = step.t1 - step.t0;
      const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h *= fac;
      if (!observer(step)) {
        res.stopped = true;
        break;
      }
    } else {
      ++res.rejected;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
    }
  }
  res.t = t;
  res.y = y;
  res.dy = k1;
  return res;
}

template <std::size_t N, class Rhs>
SegmentResult<N> dopri5_segment(Rhs&& rhs, double t0, double t1, const State<N>& y0,
                                const AdaptiveOptions& opts) {
  return dopri5_segment<N>(std::forward<Rhs>(rhs), t0, t1, y0, opts,
                           [](const Step<N>&) { return true; });
}

/// Classic fourth-order Runge-Kutta with `steps` equal steps. Reference mode
/// for order checks; not used by the production solvers.
template <std::size_t N, class Rhs>
State<N> rk4_fixed(Rhs&& rhs, double t0, double t1, State<N> y, std::size_t steps) {
  const double h = (t1 - t0) / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = t0 + static_cast<double>(s) * h;
    const State<N> k1 = rhs(t, y);
    const State<N> k2 = rhs(t + 0.5 * h, detail::axpy<N>(y, h, {{0.5, &k1}}));
    const State<N> k3 = rhs(t + 0.5 * h, detail::axpy<N>(y, h, {{0.5, &k2}}));
    const State<N> k4 = rhs(t + h, detail::axpy<N>(y, h, {{1.0, &k3}}));
    y = detail::axpy<N>(y, h, {{1.0 / 6, &k1}, {1.0 / 3, &k2}, {1.0 / 3, &k3}, {1.0 / 6, &k4}});
  }
  return y;
}

}  // namespace steklov::ode
