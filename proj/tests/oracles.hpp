#pragma once
// Reference solutions that share no code with the library.
//
// warping_oracle: classical RK4 on uniform steps with one Richardson
// extrapolation (error h^4 -> h^6). radial_fd_oracle: second-order central
// differences for the Dirichlet problem of the radial Steklov equation,
// extrapolated twice in h^2.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

struct WarpValue {
  double f;
  double fprime;
};

inline WarpValue rk4_uniform(const std::function<double(double)>& k, double r, long steps) {
  const double h = r / static_cast<double>(steps);
  double f = 0.0, g = 1.0;
  for (long i = 0; i < steps; ++i) {
    const double t = i * h;
    const double k1 = k(t), k2 = k(t + 0.5 * h), k4 = k(t + h);
    const double a1 = g, b1 = -k1 * f;
    const double a2 = g + 0.5 * h * b1, b2 = -k2 * (f + 0.5 * h * a1);
    const double a3 = g + 0.5 * h * b2, b3 = -k2 * (f + 0.5 * h * a2);
    const double a4 = g + h * b3, b4 = -k4 * (f + h * a3);
    f += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    g += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
  }
  return {f, g};
}

/// f(r) for f'' + k f = 0, f(0) = 0, f'(0) = 1 with smooth k.
inline WarpValue warping_oracle(const std::function<double(double)>& k, double r, long base_steps) {
  const auto coarse = rk4_uniform(k, r, base_steps);
  const auto fine = rk4_uniform(k, r, 2 * base_steps);
  return {(16.0 * fine.f - coarse.f) / 15.0, (16.0 * fine.fprime - coarse.fprime) / 15.0};
}

// psi'' + (n-1)(f'/f) psi' - lam psi / f^2 = 0 on (0, r), psi(0) = 0, psi(r) = 1.
// Returns the one-sided second-order estimate of psi'(r) on N intervals.
inline double radial_fd(int n, int m, const std::function<double(double)>& f,
                        const std::function<double(double)>& fp, double r, long N) {
  const double lam = m * (m + n - 2.0);
  const double h = r / static_cast<double>(N);
  // Unknowns psi_1 .. psi_{N-1}; Thomas algorithm.
  std::vector<double> sub(N), diag(N), sup(N), rhs(N, 0.0);
  for (long i = 1; i < N; ++i) {
    const double t = i * h, ft = f(t);
    const double p = (n - 1.0) * fp(t) / ft;
    sub[i] = 1.0 / (h * h) - p / (2.0 * h);
    diag[i] = -2.0 / (h * h) - lam / (ft * ft);
    sup[i] = 1.0 / (h * h) + p / (2.0 * h);
  }
  rhs[N - 1] = -sup[N - 1];  // psi_N = 1
  for (long i = 2; i < N; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> psi(N + 1, 0.0);
  psi[N] = 1.0;
  psi[N - 1] = rhs[N - 1] / diag[N - 1];
  for (long i = N - 2; i >= 1; --i) psi[i] = (rhs[i] - sup[i] * psi[i + 1]) / diag[i];
  return (3.0 * psi[N] - 4.0 * psi[N - 1] + psi[N - 2]) / (2.0 * h);
}

/// psi'(r)/psi(r) of the regular solution, from N, 2N, 4N intervals.
inline double radial_fd_oracle(int n, int m, const std::function<double(double)>& f,
                               const std::function<double(double)>& fp, double r, long N) {
  const double a = radial_fd(n, m, f, fp, r, N);
  const double b = radial_fd(n, m, f, fp, r, 2 * N);
  const double c = radial_fd(n, m, f, fp, r, 4 * N);
  const double ab = (4.0 * b - a) / 3.0, bc = (4.0 * c - b) / 3.0;
  return (16.0 * bc - ab) / 15.0;
}

inline double case2_profile(double t) {
  const double c = std::cos(M_PI - 2.0 * t);
  return 4.0 * c / (2.0 + c);
}

/// sin(sqrt(k) r)/sqrt(k), r, or sinh(sqrt(-k) r)/sqrt(-k).
inline double space_form_f(double k0, double r) {
  if (k0 > 0.0) return std::sin(std::sqrt(k0) * r) / std::sqrt(k0);
  if (k0 < 0.0) return std::sinh(std::sqrt(-k0) * r) / std::sqrt(-k0);
  return r;
}

/// 1/f_const(r) - 1/f_case2(r), the n = 2 bound margin on the torus.
inline double case2_margin(double r, long base_steps) {
  const double f2 = warping_oracle(case2_profile, r, base_steps).f;
  return 1.0 / space_form_f(case2_profile(r), r) - 1.0 / f2;
}

}  // namespace oracle
