#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "steklov/profile.hpp"

namespace steklov::torus {

/// Values of the profile curve (rho(v), y(v)) and derivatives at one v.
struct ProfilePoint {
  double rho, drho, ddrho;
  double dy, ddy;
};

/// Surface obtained by rotating (rho(v), y(v)) about the y-axis, with
/// metric rho(v)^2 du^2 + (rho'^2 + y'^2) dv^2.
class SurfaceOfRevolution {
 public:
  using Curve = std::function<ProfilePoint(double)>;

  SurfaceOfRevolution(Curve curve, double v_min, double v_max, bool v_periodic);

  /// x = (1 + eps cos v) cos u, y = eps sin v, z = (1 + eps cos v) sin u.
  static SurfaceOfRevolution ring_torus(double epsilon);

  ProfilePoint at(double v) const { return curve_(v); }
  double v_min() const noexcept { return v_min_; }
  double v_max() const noexcept { return v_max_; }
  bool v_periodic() const noexcept { return v_periodic_; }
  /// Set for ring tori built by `ring_torus`.
  std::optional<double> torus_epsilon() const noexcept { return epsilon_; }

 private:
  Curve curve_;
  double v_min_, v_max_;
  bool v_periodic_;
  std::optional<double> epsilon_;
};

enum class PointLabel { OuterEquator, InnerEquator, Generic };

struct BasePoint {
  double u0 = 0.0;
  double v0 = 0.0;
  PointLabel label = PointLabel::Generic;

  static BasePoint outer_equator() { return {0.0, 0.0, PointLabel::OuterEquator}; }
  static BasePoint inner_equator();
  /// Point on the generating circle at angle alpha.
  static BasePoint generic(double alpha) { return {0.0, alpha, PointLabel::Generic}; }
};

/// Gaussian curvature at parameter v. For the ring torus this is
/// cos v / (eps (1 + eps cos v)); otherwise y'(rho' y'' - rho'' y') / (rho (rho'^2 + y'^2)^2).
double gauss_curvature(const SurfaceOfRevolution& s, double v);

/// Radial curvature upper-bound profiles of the eps = 1/2 torus on [0, pi/2]:
/// case 1 is 4/3, case 2 is 4cos(pi-2t)/(2+cos(pi-2t)), case 3 follows
/// 4cos(alpha-2t)/(2+cos(alpha-2t)) up to alpha/2 and is 4/3 beyond.
/// Throws InvalidArgument for an unknown case, alpha outside (0, pi) in
/// case 3, or epsilon != 1/2.
CurvatureProfile case_profile(int which, double alpha = 0.0, double epsilon = 0.5);

enum class CurvatureSign { Spherical, Flat, Hyperbolic };

struct ReferenceConstant {
  double k0;
  CurvatureSign sign;
};

/// Best constant bound over geodesic balls of radius r: the supremum of the
/// case profile on [0, r). Requires 0 < r < pi/2.
ReferenceConstant escobar_reference_constant(int which, double r, double alpha = 0.0);

struct CircleMaximum {
  double max_curvature;
  double direction;        ///< initial angle from the meridian achieving it
  double clairaut_drift;   ///< worst relative drift over all integrated geodesics
  std::size_t geodesics;
};

/// Integrates unit-speed geodesics from p in `directions` equally spaced
/// initial directions to arc length t, takes the largest endpoint Gaussian
/// curvature and refines the maximizing direction by golden-section search
/// until it changes by less than `tol`. Throws GeodesicEscape if a geodesic
/// leaves the parameter chart.
CircleMaximum geodesic_circle_max_curvature(const SurfaceOfRevolution& s, const BasePoint& p,
                                            double t, int directions = 64, double tol = 1e-10);

struct GeodesicEnd {
  double u, v;
  double clairaut_drift;
};

/// Endpoint of the unit-speed geodesic from (u0, v0) leaving at angle theta
/// from the meridian (theta = 0 moves towards increasing v).
GeodesicEnd shoot_geodesic(const SurfaceOfRevolution& s, double u0, double v0, double theta,
                           double length);

}  // namespace steklov::torus
