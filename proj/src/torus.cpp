#include "steklov/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/error.hpp"
#include "steklov/ode.hpp"

namespace steklov::torus {

using std::numbers::pi;

SurfaceOfRevolution::SurfaceOfRevolution(Curve curve, double v_min, double v_max, bool v_periodic)
    : curve_(std::move(curve)), v_min_(v_min), v_max_(v_max), v_periodic_(v_periodic) {
  if (!curve_) throw Error(ErrorCode::InvalidArgument, "surface of revolution needs a profile curve");
  if (!(v_max_ > v_min_)) throw Error(ErrorCode::InvalidArgument, "empty parameter range");
}

SurfaceOfRevolution SurfaceOfRevolution::ring_torus(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::InvalidArgument, "ring torus needs 0 < epsilon < 1");
  SurfaceOfRevolution s(
      [epsilon](double v) {
        const double c = std::cos(v), sn = std::sin(v);
        return ProfilePoint{1.0 + epsilon * c, -epsilon * sn, -epsilon * c, epsilon * c, -epsilon * sn};
      },
      0.0, 2.0 * pi, true);
  s.epsilon_ = epsilon;
  return s;
}

BasePoint BasePoint::inner_equator() { return {0.0, pi, PointLabel::InnerEquator}; }

double gauss_curvature(const SurfaceOfRevolution& s, double v) {
  if (const auto eps = s.torus_epsilon()) {
    const double c = std::cos(v);
    return c / (*eps * (1.0 + *eps * c));
  }
  const auto p = s.at(v);
  const double speed2 = p.drho * p.drho + p.dy * p.dy;
  return p.dy * (p.drho * p.ddy - p.ddrho * p.dy) / (p.rho * speed2 * speed2);
}

CurvatureProfile case_profile(int which, double alpha, double epsilon) {
  if (epsilon != 0.5)
    throw Error(ErrorCode::InvalidArgument, "torus case profiles are closed forms for epsilon = 1/2 only");
  const double t_max = 0.5 * pi;
  switch (which) {
    case 1:
      return CurvatureProfile::constant(4.0 / 3.0, t_max);
    case 2:
      return CurvatureProfile({Piece{0.0, t_max, CosineRationalPiece{4.0, pi, -2.0, 2.0, 1.0}}});
    case 3:
      if (!(alpha > 0.0 && alpha < pi))
        throw Error(ErrorCode::InvalidArgument, "case 3 needs 0 < alpha < pi");
      return CurvatureProfile({Piece{0.0, 0.5 * alpha, CosineRationalPiece{4.0, alpha, -2.0, 2.0, 1.0}},
                               Piece{0.5 * alpha, t_max, ConstantPiece{4.0 / 3.0}}});
    default:
      throw Error(ErrorCode::InvalidArgument, "torus case must be 1, 2 or 3");
  }
}

ReferenceConstant escobar_reference_constant(int which, double r, double alpha) {
  if (!(r > 0.0 && r < 0.5 * pi))
    throw Error(ErrorCode::InvalidArgument, "reference constant needs 0 < r < pi/2");
  double k0 = 4.0 / 3.0;
  if (which == 2) {
    const double cs = std::cos(pi - 2.0 * r);
    k0 = 4.0 * cs / (2.0 + cs);
  } else if (which == 3) {
    if (!(alpha > 0.0 && alpha < pi)) throw Error(ErrorCode::InvalidArgument, "case 3 needs 0 < alpha < pi");
    if (r <= 0.5 * alpha) {
      const double cs = std::cos(alpha - 2.0 * r);
      k0 = 4.0 * cs / (2.0 + cs);
    }
  } else if (which != 1) {
    throw Error(ErrorCode::InvalidArgument, "torus case must be 1, 2 or 3");
  }
  const CurvatureSign sign = std::abs(k0) <= 1e-12 ? CurvatureSign::Flat
                             : k0 > 0.0           ? CurvatureSign::Spherical
                                                  : CurvatureSign::Hyperbolic;
  return {k0, sign};
}

GeodesicEnd shoot_geodesic(const SurfaceOfRevolution& s, double u0, double v0, double theta,
                           double length) {
  const auto p0 = s.at(v0);
  const double e0 = p0.drho * p0.drho + p0.dy * p0.dy;
  if (!(p0.rho > 0.0) || !(e0 > 0.0))
    throw Error(ErrorCode::GeodesicEscape, "base point is not a regular point of the chart");

  // State (u, v, du/ds, dv/ds) along arc length.
  auto rhs = [&s](double, const ode::State<4>& y) -> ode::State<4> {
    const auto p = s.at(y[1]);
    const double e = p.drho * p.drho + p.dy * p.dy;
    if (!(p.rho > 0.0) || !(e > 0.0) || !std::isfinite(p.rho))
      throw Error(ErrorCode::GeodesicEscape, "geodesic left the regular part of the chart");
    const double du = y[2], dv = y[3];
    return {du, dv, -2.0 * (p.drho / p.rho) * du * dv,
            (p.rho * p.drho / e) * du * du - ((p.drho * p.ddrho + p.dy * p.ddy) / e) * dv * dv};
  };
  const ode::State<4> y0{u0, v0, std::sin(theta) / p0.rho, std::cos(theta) / std::sqrt(e0)};
  const double c0 = p0.rho * p0.rho * y0[2];
  const double scale = std::max(std::abs(c0), p0.rho);

  ode::AdaptiveOptions opts;
  opts.rtol = 1e-12;
  opts.atol = 1e-14;
  double drift = 0.0;
  const auto res = ode::dopri5_segment<4>(rhs, 0.0, length, y0, opts, [&](const ode::Step<4>& st) {
    const double rho = s.at(st.y1[1]).rho;
    drift = std::max(drift, std::abs(rho * rho * st.y1[2] - c0) / scale);
    return true;
  });
  const double v = res.y[1];
  if (!s.v_periodic() && (v < s.v_min() || v > s.v_max()))
    throw Error(ErrorCode::GeodesicEscape, "geodesic left the parameter range");
  return {res.y[0], v, drift};
}

CircleMaximum geodesic_circle_max_curvature(const SurfaceOfRevolution& s, const BasePoint& p,
                                            double t, int directions, double tol) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
  if (s.torus_epsilon() && !(t < 0.5 * pi))
    throw Error(ErrorCode::InvalidArgument, "torus circles are only valid for 0 < t < pi/2");
  if (directions < 16) throw Error(ErrorCode::InvalidArgument, "at least 16 directions are required");

  CircleMaximum out{-std::numeric_limits<double>::infinity(), 0.0, 0.0, 0};
  auto curvature_at = [&](double theta) {
    const auto end = shoot_geodesic(s, p.u0, p.v0, theta, t);
    out.clairaut_drift = std::max(out.clairaut_drift, end.clairaut_drift);
    ++out.geodesics;
    return gauss_curvature(s, end.v);
  };

  const double step = 2.0 * pi / directions;
  int best = 0;
  for (int i = 0; i < directions; ++i) {
    const double k = curvature_at(i * step);
    if (k > out.max_curvature) {
      out.max_curvature = k;
      best = i;
    }
  }
  out.direction = best * step;

  // Golden-section refinement inside the neighbouring coarse directions.
  constexpr double kInvPhi = 0.6180339887498949;
  double a = (best - 1) * step, b = (best + 1) * step;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double kc = curvature_at(c), kd = curvature_at(d);
  double previous = out.max_curvature;
  for (int iter = 0; iter < 200 && (b - a) > 1e-12; ++iter) {
    if (kc > kd) {
      b = d;
      d = c;
      kd = kc;
      c = b - kInvPhi * (b - a);
      kc = curvature_at(c);
    } else {
      a = c;
      c = d;
      kc = kd;
      d = a + kInvPhi * (b - a);
      kd = curvature_at(d);
    }
    const double current = std::max(kc, kd);
    if (current > out.max_curvature) {
      out.max_curvature = current;
      out.direction = kc > kd ? c : d;
    }
    if (std::abs(current - previous) < tol && (b - a) < 1e-6) break;
    previous = current;
  }
  return out;
}

}  // namespace steklov::torus
