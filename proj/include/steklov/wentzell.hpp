#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace steklov::wentzell {

/// Parameters of the Wentzell eigenvalue estimates on an (n+1)-dimensional
/// weighted manifold whose boundary has dimension n.
struct Setting {
  int n = 2;
  double lambda1c = 0.0;  ///< first non-zero closed eigenvalue of the boundary
  double c = 1.0;         ///< lower bound of the second fundamental form
  double K = 3.0;         ///< Bakry-Emery dimension parameter
  double beta = 0.0;      ///< boundary diffusion coefficient
};

/// c > 0, beta >= 0, K >= n + 1, lambda1c > 0, n >= 1. Throws InvalidArgument.
void validate(const Setting& s);

/// beta lambda1c + sqrt(lambda1c) (sqrt(lambda1c) + sqrt(lambda1c - (K-1)c^2)) / ((K-1)c).
/// Throws InvalidRadicand if lambda1c < (K-1)c^2.
double upper_bound(const Setting& s);

struct LowerBound {
  double value;
  bool strict = true;  ///< the estimate is a strict inequality
};

/// c/2 [1 + (K-1)c beta + sqrt((K-1)c^2 beta^2 + 2(K-1)c beta)]; lambda1c unused.
LowerBound lower_bound(const Setting& s);

struct Floor {
  double value;
  const char* equality_case;
};

/// (K-1)c^2, the lower bound for lambda1c of the boundary.
Floor lambda1c_floor(double c, double K);

struct Report {
  double lower;
  double upper;
  double gap;
  bool valid;
  /// lambda1c sits on the floor and beta = 0: lower c/2, upper c.
  bool degenerate_sandwich;
};

/// Both bounds; propagates InvalidRadicand.
Report consistency_report(const Setting& s);

/// Wentzell eigenvalue beta n c^2 + c of the Euclidean ball of radius 1/c
/// (coordinate functions are the eigenfunctions).
double euclidean_ball_eigenvalue(int n, double c, double beta);

struct BatchSummary {
  std::size_t rows = 0;
  std::size_t invalid = 0;
};

/// Reads CSV rows with header `n,lambda1c,c,K,beta` and writes
/// `n,lambda1c,c,K,beta,lower,upper,gap,valid,status`. Invalid rows are
/// written with status set and empty bound columns; processing continues.
/// A malformed header or unparsable row raises Error(Config).
BatchSummary run_batch(std::istream& in, std::ostream& out);

}  // namespace steklov::wentzell
