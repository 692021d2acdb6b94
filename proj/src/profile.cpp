#include "steklov/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "steklov/error.hpp"

namespace steklov {

double CosineRationalPiece::operator()(double t) const {
  const double cs = std::cos(b + c * t);
  return a * cs / (d + e * cs);
}

double TablePiece::operator()(double x) const {
  if (x <= t.front()) return k.front();
  if (x >= t.back()) return k.back();
  const auto it = std::upper_bound(t.begin(), t.end(), x);
  const auto i = static_cast<std::size_t>(std::distance(t.begin(), it)) - 1;
  const double w = (x - t[i]) / (t[i + 1] - t[i]);
  return (1.0 - w) * k[i] + w * k[i + 1];
}

namespace {

void validate_table(const TablePiece& table, double from, double to) {
  if (table.t.size() < 2 || table.t.size() != table.k.size())
    throw Error(ErrorCode::InvalidArgument, "table piece needs >= 2 matching (t, k) samples");
  for (std::size_t i = 1; i < table.t.size(); ++i)
    if (!(table.t[i] > table.t[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "table piece abscissae must be strictly increasing");
  for (double v : table.k)
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "table piece value not finite");
  const double slack = 1e-12 * std::max(1.0, std::abs(to));
  if (std::abs(table.t.front() - from) > slack || std::abs(table.t.back() - to) > slack)
    throw Error(ErrorCode::InvalidArgument, "table piece must span its interval exactly");
}

}  // namespace

CurvatureProfile::CurvatureProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::InvalidArgument, "curvature profile has no pieces");
  double expected = 0.0;
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.t_from) || !std::isfinite(p.t_to))
      throw Error(ErrorCode::InvalidArgument, "piece endpoints must be finite");
    if (p.t_from != expected)
      throw Error(ErrorCode::InvalidArgument, "pieces must cover [0, t_max] without gaps or overlaps");
    if (!(p.t_to > p.t_from)) throw Error(ErrorCode::InvalidArgument, "piece interval is empty");
    if (const auto* table = std::get_if<TablePiece>(&p.shape)) validate_table(*table, p.t_from, p.t_to);
    if (const auto* fn = std::get_if<FunctionPiece>(&p.shape); fn && !fn->fn)
      throw Error(ErrorCode::InvalidArgument, "function piece has no callable");
    expected = p.t_to;
  }
}

CurvatureProfile CurvatureProfile::constant(double k0, double t_max) {
  if (!std::isfinite(k0)) throw Error(ErrorCode::NonFiniteCurvature, "constant curvature not finite");
  return CurvatureProfile({Piece{0.0, t_max, ConstantPiece{k0}}});
}

CurvatureProfile CurvatureProfile::from_function(std::function<double(double)> fn, double t_max,
                                                 std::string label) {
  return CurvatureProfile({Piece{0.0, t_max, FunctionPiece{std::move(fn), std::move(label)}}});
}

std::size_t CurvatureProfile::piece_index(double t) const {
  // First piece whose right end exceeds t; the last piece is closed.
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (t < pieces_[i].t_to) return i;
  return pieces_.size() - 1;
}

double CurvatureProfile::eval_piece(std::size_t piece, double t) const {
  const double value = std::visit(
      [t](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, ConstantPiece>) {
          return shape.value;
        } else if constexpr (std::is_same_v<T, FunctionPiece>) {
          return shape.fn(t);
        } else {
          return shape(t);
        }
      },
      pieces_.at(piece).shape);
  if (!std::isfinite(value))
    throw Error(ErrorCode::NonFiniteCurvature, "curvature not finite at t = " + std::to_string(t));
  return value;
}

double CurvatureProfile::operator()(double t) const {
  if (!(t >= 0.0) || t > t_max()) throw Error(ErrorCode::InvalidArgument, "t outside profile domain");
  return eval_piece(piece_index(t), t);
}

std::vector<double> CurvatureProfile::breakpoints() const {
  std::vector<double> knots;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) knots.push_back(pieces_[i].t_from);
    if (const auto* table = std::get_if<TablePiece>(&pieces_[i].shape))
      for (std::size_t j = 1; j + 1 < table->t.size(); ++j) knots.push_back(table->t[j]);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

std::vector<SmoothSegment> CurvatureProfile::segments(double t_end) const {
  const double end = std::min(t_end, t_max());
  std::vector<SmoothSegment> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (p.t_from >= end) break;
    std::vector<double> cuts{p.t_from};
    if (const auto* table = std::get_if<TablePiece>(&p.shape))
      for (std::size_t j = 1; j + 1 < table->t.size(); ++j) cuts.push_back(table->t[j]);
    cuts.push_back(p.t_to);
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      if (cuts[j] >= end) break;
      out.push_back({cuts[j], std::min(cuts[j + 1], end), i});
    }
  }
  return out;
}

bool CurvatureProfile::is_continuous(double tol) const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const double t = pieces_[i].t_to;
    if (std::abs(eval_piece(i, t) - eval_piece(i + 1, t)) > tol) return false;
  }
  return true;
}

std::optional<double> CurvatureProfile::constant_value() const {
  std::optional<double> value;
  for (const auto& p : pieces_) {
    const auto* c = std::get_if<ConstantPiece>(&p.shape);
    if (!c || (value && *value != c->value)) return std::nullopt;
    value = c->value;
  }
  return value;
}

bool CurvatureProfile::serializable() const {
  return std::none_of(pieces_.begin(), pieces_.end(), [](const Piece& p) {
    return std::holds_alternative<FunctionPiece>(p.shape);
  });
}

}  // namespace steklov
