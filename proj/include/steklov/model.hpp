#pragma once

#include <cstdint>
#include <string>

#include "steklov/profile.hpp"
#include "steklov/warping.hpp"

namespace steklov {

/// Geodesic ball of radius r about the pole of the model manifold
/// [0, l) x_f S^{n-1} with metric dt^2 + f(t)^2 |dxi|^2.
class ModelBall {
 public:
  /// Throws InvalidArgument for n < 2, r <= 0 or r beyond the sampled
  /// warping, and ZeroBeforeR if f vanishes on (0, r].
  ModelBall(int n, double r, WarpingFunction warping);

  int n() const noexcept { return n_; }
  double r() const noexcept { return r_; }
  const WarpingFunction& warping() const noexcept { return warping_; }
  double f_at_r() const { return warping_.value(r_); }

 private:
  int n_;
  double r_;
  WarpingFunction warping_;
};

/// Regular solution data of one angular mode at the boundary.
struct ModeLogDerivative {
  double value;  ///< psi'(r) / psi(r)
  double psi_at_r;
  double psiprime_at_r;
  std::size_t steps;
  double start_error;  ///< size of the neglected t^2 series term at the start offset
};

struct SolverDiagnostics {
  std::size_t steps = 0;
  double residual = 0.0;
  std::string method;
};

struct SteklovResult {
  double v1;
  int mode;
  double psi_at_r;
  double psiprime_at_r;
  SolverDiagnostics diagnostics;
};

inline constexpr int kDefaultMaxMode = 8;

/// Integrates psi'' + (n-1)(f'/f) psi' - m(m+n-2) psi / f^2 = 0 from the
/// regular branch psi ~ t^m and returns psi'(r)/psi(r). Throws
/// OriginSingularity or PsiVanished.
ModeLogDerivative steklov_mode_logderivative(const ModelBall& ball, int m,
                                             double tol = kDefaultTolerance);

/// First non-zero Steklov eigenvalue. n = 2 uses the closed form 1/f(r);
/// n >= 3 takes the minimum over modes 1..max_mode.
SteklovResult steklov_v1(const ModelBall& ball, int max_mode = kDefaultMaxMode,
                         double tol = kDefaultTolerance);

/// (n-1)/f(r)^2: first non-zero eigenvalue of the round boundary sphere.
double boundary_lambda1c(const ModelBall& ball);

/// Total measure of the unit (n-1)-sphere, 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_measure(int n);

struct VolumeArea {
  double volume;
  double boundary_area;
};

VolumeArea ball_volume_and_area(const ModelBall& ball);

/// Separable test function u(t, xi) = sum_j R_j(t) Y_j(xi). Each term uses a
/// distinct L2-normalized spherical harmonic of the given degree, and
/// R_j(t) = sum_p radial[p] t^p. Powers p below the degree are ignored so
/// that u stays in H^1 near the pole.
struct TestFunction {
  struct Term {
    int degree;
    std::vector<double> radial;
  };
  std::vector<Term> terms;
};

/// v1 * boundary variance / Dirichlet energy of `u`. Returns nullopt when
/// the energy is below 1e-14 (degenerate trial).
std::optional<double> trace_ratio(const ModelBall& ball, const TestFunction& u, double v1);

struct TraceReport {
  double max_ratio = 0.0;
  bool pass = false;
  std::size_t trials = 0;
  std::size_t discarded = 0;
  double v1 = 0.0;
};

/// Random trials of the Sobolev trace inequality on the ball.
TraceReport trace_inequality_check(const ModelBall& ball, int num_trials, std::uint64_t seed);

struct ComparisonReport {
  int n;
  double r;
  double v1_model_variable;
  double v1_model_constant;
  double f_at_r_variable;
  double f_at_r_constant;
  int mode;
  bool sharper;
  double margin;  ///< v1_model_constant - v1_model_variable
  bool dominated;    ///< k_upper <= reference_k0 on the sampled (0, r)
  bool consistent;   ///< dominated implies margin >= -slack
  /// For n <= 3 the boundary-eigenvalue hypothesis holds automatically;
  /// for n >= 4 it is assumed, not checked.
  bool boundary_hypothesis_assumed;
};

ComparisonReport comparison_report(const CurvatureProfile& k_upper, int n, double r,
                                   double reference_k0, double tol = kDefaultTolerance);

}  // namespace steklov
