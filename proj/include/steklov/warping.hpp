#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steklov/profile.hpp"

namespace steklov {

inline constexpr double kDefaultTolerance = 1e-10;

/// Solution of f'' + k f = 0, f(0) = 0, f'(0) = 1, sampled on a grid and
/// interpolated by piecewise quintic Hermite polynomials through
/// (f, f', f'') at the nodes. Closed-form space forms use the same
/// interface and evaluate their formula directly between nodes.
class WarpingFunction {
 public:
  struct Sample {
    double f;
    double fprime;
    double fsecond;
  };

  std::span<const double> grid() const noexcept { return grid_; }
  std::span<const double> f_values() const noexcept { return f_; }
  std::span<const double> fprime_values() const noexcept { return fp_; }
  std::optional<double> first_zero() const noexcept { return first_zero_; }
  double t_end() const noexcept { return grid_.back(); }
  int interpolation_order() const noexcept { return 5; }
  /// Knots where f'' may jump (inherited from the curvature profile).
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  double curvature_at_origin() const noexcept { return k_origin_; }
  /// Curvature of the space form when this is a closed form.
  std::optional<double> space_form_curvature() const noexcept { return space_form_; }

  /// Dense evaluation on [0, t_end]; throws InvalidArgument outside.
  Sample eval(double t) const;
  double value(double t) const { return eval(t).f; }
  double derivative(double t) const { return eval(t).fprime; }
  double second_derivative(double t) const { return eval(t).fsecond; }

  /// Adaptive steps accepted while solving (0 for closed forms).
  std::size_t steps() const noexcept { return steps_; }

 private:
  friend WarpingFunction solve_warping(const CurvatureProfile&, double, double);
  friend WarpingFunction space_form_warping(double, std::optional<double>);
  WarpingFunction() = default;

  std::vector<double> grid_, f_, fp_;
  // f'' limits at each node from the right and from the left.
  std::vector<double> fpp_right_, fpp_left_;
  std::vector<double> breakpoints_;
  std::optional<double> first_zero_;
  std::optional<double> space_form_;
  double k_origin_ = 0.0;
  std::size_t steps_ = 0;
};

/// Integrates the warping IVP on [0, t_max] with breakpoints of `k` as step
/// endpoints. If f reaches zero first, the solution is truncated there and
/// the zero recorded. Throws InvalidArgument, NonFiniteCurvature or
/// ToleranceUnachievable.
WarpingFunction solve_warping(const CurvatureProfile& k, double t_max,
                              double tol = kDefaultTolerance);

/// sin(sqrt(k0) t)/sqrt(k0), t, or sinh(sqrt(-k0) t)/sqrt(-k0). Without
/// `t_max` the domain is [0, pi/sqrt(k0)] for k0 > 0 and [0, 10] otherwise.
WarpingFunction space_form_warping(double k0, std::optional<double> t_max = std::nullopt);

/// First zero of f in (0, t_end], refined on the interpolant to 1e-12.
std::optional<double> first_zero(const WarpingFunction& w);

/// Fourth-order fixed-step reference integration of the warping IVP, steps
/// aligned to the profile breakpoints. Returns (f, f') at `t`.
WarpingFunction::Sample warping_fixed_step(const CurvatureProfile& k, double t, std::size_t steps);

enum class Ordering { FirstGreater, Equal, SecondGreater };

struct ComparisonVerdict {
  double f1_at_r;
  double f2_at_r;
  Ordering ordering;
  double margin;  ///< f1(r) - f2(r)
};

/// Solves both warping IVPs on [0, r] and orders f1(r) against f2(r).
/// Throws ZeroBeforeR if either solution vanishes in (0, r].
ComparisonVerdict sturm_picone_compare(const CurvatureProfile& k1, const CurvatureProfile& k2,
                                       double r, double tol = kDefaultTolerance);

}  // namespace steklov
