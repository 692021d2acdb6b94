// Sobolev trace inequality check on model balls.
//
// For u = sum_j R_j(t) Y_j(xi) with L2-orthonormal harmonics Y_j of degree
// l_j, the angular integrals are exact:
//   int_B |grad u|^2   = sum_j int_0^r (R_j'^2 + l_j(l_j+n-2) R_j^2 / f^2) f^{n-1} dt
//   int_dB (u - u0)^2  = f(r)^{n-1} sum_{j : l_j >= 1} R_j(r)^2
// so only the radial integrals need quadrature. They are assembled once per
// degree as Gram matrices over the monomials t^p.

#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "steklov/error.hpp"
#include "steklov/model.hpp"

namespace steklov {

namespace {

constexpr int kMaxPower = 4;
constexpr int kMaxDegree = 2;
constexpr double kDegenerateEnergy = 1e-14;

using Gram = std::array<std::array<double, kMaxPower + 1>, kMaxPower + 1>;

class RadialForms {
 public:
  explicit RadialForms(const ModelBall& ball) : ball_(ball) {}

  const Gram& energy(int degree) {
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "harmonic degree must be >= 0");
    while (static_cast<int>(cache_.size()) <= degree) cache_.push_back(assemble(static_cast<int>(cache_.size())));
    return cache_[static_cast<std::size_t>(degree)];
  }

 private:
  Gram assemble(int degree) const {
    using boost::math::quadrature::gauss_kronrod;
    const auto& w = ball_.warping();
    const int n = ball_.n();
    const double lambda = static_cast<double>(degree) * (degree + n - 2);
    std::vector<double> pts{0.0};
    for (double b : w.breakpoints())
      if (b > 0.0 && b < ball_.r()) pts.push_back(b);
    pts.push_back(ball_.r());

    Gram g{};
    for (int p = degree; p <= kMaxPower; ++p) {
      for (int q = p; q <= kMaxPower; ++q) {
        auto integrand = [&](double t) {
          const double f = w.value(t);
          const double density = std::pow(f, n - 1);
          const double grad = (p * q == 0) ? 0.0 : p * q * std::pow(t, p + q - 2);
          const double angular = lambda == 0.0 ? 0.0 : lambda * std::pow(t, p + q) / (f * f);
          return (grad + angular) * density;
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
          total += gauss_kronrod<double, 31>::integrate(integrand, pts[i], pts[i + 1], 15, 1e-13);
        g[p][q] = g[q][p] = total;
      }
    }
    return g;
  }

  const ModelBall& ball_;
  std::vector<Gram> cache_;
};

std::optional<double> ratio_with(RadialForms& forms, const ModelBall& ball, const TestFunction& u,
                                 double v1) {
  double energy = 0.0;
  double variance = 0.0;
  const double r = ball.r();
  for (const auto& term : u.terms) {
    if (term.radial.size() > kMaxPower + 1)
      throw Error(ErrorCode::InvalidArgument, "radial polynomial degree exceeds 4");
    const Gram& g = forms.energy(term.degree);
    double boundary = 0.0;
    for (int p = term.degree; p < static_cast<int>(term.radial.size()); ++p) {
      boundary += term.radial[p] * std::pow(r, p);
      for (int q = term.degree; q < static_cast<int>(term.radial.size()); ++q)
        energy += term.radial[p] * g[p][q] * term.radial[q];
    }
    if (term.degree >= 1) variance += boundary * boundary;
  }
  if (energy < kDegenerateEnergy) return std::nullopt;
  variance *= std::pow(ball.f_at_r(), ball.n() - 1);
  return v1 * variance / energy;
}

/// Number of linearly independent degree-l harmonics on S^{n-1}.
int harmonic_dimension(int n, int l) {
  auto binom = [](int a, int b) -> long {
    if (b < 0 || a < b) return 0;
    long out = 1;
    for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
    return out;
  };
  return static_cast<int>(binom(n + l - 1, l) - binom(n + l - 3, l - 2));
}

double uniform_pm1(std::mt19937_64& rng) {
  // Explicit conversion keeps sequences identical across standard libraries.
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

}  // namespace

std::optional<double> trace_ratio(const ModelBall& ball, const TestFunction& u, double v1) {
  RadialForms forms(ball);
  return ratio_with(forms, ball, u, v1);
}

TraceReport trace_inequality_check(const ModelBall& ball, int num_trials, std::uint64_t seed) {
  if (num_trials < 1) throw Error(ErrorCode::InvalidArgument, "num_trials must be >= 1");
  TraceReport report;
  report.v1 = steklov_v1(ball).v1;
  RadialForms forms(ball);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < num_trials; ++trial) {
    TestFunction u;
    for (int l = 0; l <= kMaxDegree; ++l) {
      const int count = std::min(harmonic_dimension(ball.n(), l), 3);
      for (int j = 0; j < count; ++j) {
        TestFunction::Term term{l, std::vector<double>(kMaxPower + 1, 0.0)};
        for (int p = l; p <= kMaxPower; ++p) term.radial[p] = uniform_pm1(rng);
        u.terms.push_back(std::move(term));
      }
    }
    ++report.trials;
    const auto ratio = ratio_with(forms, ball, u, report.v1);
    if (!ratio) {
      ++report.discarded;
      continue;
    }
    report.max_ratio = std::max(report.max_ratio, *ratio);
  }
  report.pass = report.max_ratio <= 1.0 + 1e-6;
  return report;
}

}  // namespace steklov
