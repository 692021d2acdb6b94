#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steklov {

struct ConstantPiece {
  double value = 0.0;
};

/// a*cos(b + c*t) / (d + e*cos(b + c*t)). Covers the ring-torus profiles,
/// e.g. 4cos(pi - 2t)/(2 + cos(pi - 2t)) is {4, pi, -2, 2, 1}.
struct CosineRationalPiece {
  double a = 0.0, b = 0.0, c = 0.0, d = 1.0, e = 0.0;
  double operator()(double t) const;
};

/// Tabulated samples joined linearly. Interior nodes are treated as
/// breakpoints by the integrators.
struct TablePiece {
  std::vector<double> t;
  std::vector<double> k;
  double operator()(double t) const;
};

/// Programmatic piece; not representable in the config format.
struct FunctionPiece {
  std::function<double(double)> fn;
  std::string label;
};

using PieceShape = std::variant<ConstantPiece, CosineRationalPiece, TablePiece, FunctionPiece>;

struct Piece {
  double t_from = 0.0;
  double t_to = 0.0;
  PieceShape shape;
};

/// Interval on which the profile is evaluated by a single smooth formula.
struct SmoothSegment {
  double t_from;
  double t_to;
  std::size_t piece;
};

/// Radial curvature upper bound k(t) on [0, t_max], given piecewise.
/// Immutable after construction; copies share nothing mutable.
class CurvatureProfile {
 public:
  /// Pieces must be contiguous from 0, non-empty, with finite endpoints.
  /// Throws Error(InvalidArgument) otherwise.
  explicit CurvatureProfile(std::vector<Piece> pieces);

  static CurvatureProfile constant(double k0, double t_max);
  static CurvatureProfile from_function(std::function<double(double)> fn, double t_max,
                                        std::string label = {});

  double t_max() const noexcept { return pieces_.back().t_to; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }

  /// k(t). At an interior breakpoint the piece starting there is used.
  /// Throws NonFiniteCurvature if the value is not finite.
  double operator()(double t) const;

  /// One-sided evaluation through a given piece, used on smooth segments.
  double eval_piece(std::size_t piece, double t) const;

  /// Interior knots: piece boundaries and table nodes, sorted, unique.
  std::vector<double> breakpoints() const;

  /// Smooth segments covering [0, min(t_end, t_max)], in order.
  std::vector<SmoothSegment> segments(double t_end) const;

  /// True when adjacent pieces agree at shared breakpoints within `tol`.
  bool is_continuous(double tol = 1e-12) const;

  /// Set when every piece is the same constant.
  std::optional<double> constant_value() const;

  /// Whether the profile can be written to the config format.
  bool serializable() const;

 private:
  std::size_t piece_index(double t) const;
  std::vector<Piece> pieces_;
};

/// Config file format (JSON, UTF-8):
///   {"schema": "steklov.curvature_profile", "schema_version": 1,
///    "t_max": <number, optional>,
///    "pieces": [{"t_from": 0, "t_to": 1, "kind": "constant", "value": 1},
///               {"kind": "cosine_rational", "a":.., "b":.., "c":.., "d":.., "e":..},
///               {"kind": "expression-table", "t": [...], "k": [...]}]}
/// Every piece carries t_from/t_to. Errors raise Error(Config).
inline constexpr int kProfileSchemaVersion = 1;
inline constexpr std::string_view kProfileSchemaName = "steklov.curvature_profile";

CurvatureProfile parse_profile_config(std::string_view text);
CurvatureProfile load_profile_config(const std::string& path);
std::string to_profile_config(const CurvatureProfile& profile);

}  // namespace steklov
