#pragma once

// Quintic Hermite interpolation on one interval from value, first and
// second derivative at both ends.

namespace steklov::detail {

struct HermiteEnd {
  double f, fp, fpp;
};

struct HermiteValue {
  double f, fp, fpp;
};

inline HermiteValue quintic_hermite(double a, double b, const HermiteEnd& left,
                                    const HermiteEnd& right, double t) {
  const double h = b - a;
  const double s = (t - a) / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;

  const double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
  const double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
  const double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
  const double h3 = 10 * s3 - 15 * s4 + 6 * s5;
  const double h4 = -4 * s3 + 7 * s4 - 3 * s5;
  const double h5 = 0.5 * s3 - s4 + 0.5 * s5;

  const double d0 = -30 * s2 + 60 * s3 - 30 * s4;
  const double d1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
  const double d2 = s - 4.5 * s2 + 6 * s3 - 2.5 * s4;
  const double d3 = 30 * s2 - 60 * s3 + 30 * s4;
  const double d4 = -12 * s2 + 28 * s3 - 15 * s4;
  const double d5 = 1.5 * s2 - 4 * s3 + 2.5 * s4;

  const double q0 = -60 * s + 180 * s2 - 120 * s3;
  const double q1 = -36 * s + 96 * s2 - 60 * s3;
  const double q2 = 1 - 9 * s + 18 * s2 - 10 * s3;
  const double q3 = 60 * s - 180 * s2 + 120 * s3;
  const double q4 = -24 * s + 84 * s2 - 60 * s3;
  const double q5 = 3 * s - 12 * s2 + 10 * s3;

  HermiteValue out;
  out.f = h0 * left.f + h * h1 * left.fp + h * h * h2 * left.fpp + h3 * right.f +
          h * h4 * right.fp + h * h * h5 * right.fpp;
  out.fp = (d0 * left.f + h * d1 * left.fp + h * h * d2 * left.fpp + d3 * right.f +
            h * d4 * right.fp + h * h * d5 * right.fpp) /
           h;
  out.fpp = (q0 * left.f + h * q1 * left.fp + h * h * q2 * left.fpp + q3 * right.f +
             h * q4 * right.fp + h * h * q5 * right.fpp) /
            (h * h);
  return out;
}

}  // namespace steklov::detail
