#include "steklov/wentzell.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "format.hpp"
#include "steklov/error.hpp"

namespace steklov::wentzell {

void validate(const Setting& s) {
  if (s.n < 1) throw Error(ErrorCode::InvalidArgument, "boundary dimension n must be >= 1");
  if (!(s.c > 0.0) || !std::isfinite(s.c)) throw Error(ErrorCode::InvalidArgument, "c must be > 0");
  if (!(s.beta >= 0.0) || !std::isfinite(s.beta))
    throw Error(ErrorCode::InvalidArgument, "beta must be >= 0");
  if (!(s.K >= s.n + 1) || !std::isfinite(s.K))
    throw Error(ErrorCode::InvalidArgument, "K must be >= n + 1");
  if (!(s.lambda1c > 0.0) || !std::isfinite(s.lambda1c))
    throw Error(ErrorCode::InvalidArgument, "lambda1c must be > 0");
}

double upper_bound(const Setting& s) {
  validate(s);
  const double km1 = s.K - 1.0;
  const double radicand = s.lambda1c - km1 * s.c * s.c;
  if (radicand < 0.0)
    throw Error(ErrorCode::InvalidRadicand, "lambda1c is below (K-1)c^2; upper bound undefined");
  const double root = std::sqrt(s.lambda1c);
  return s.beta * s.lambda1c + root * (root + std::sqrt(radicand)) / (km1 * s.c);
}

LowerBound lower_bound(const Setting& s) {
  validate(s);
  const double km1 = s.K - 1.0;
  const double cb = km1 * s.c * s.beta;
  return {0.5 * s.c * (1.0 + cb + std::sqrt(cb * s.c * s.beta + 2.0 * cb)), true};
}

Floor lambda1c_floor(double c, double K) {
  if (!(c > 0.0) || !(K > 1.0))
    throw Error(ErrorCode::InvalidArgument, "lambda1c floor needs c > 0 and K > 1");
  return {(K - 1.0) * c * c, "iff Euclidean ball of radius 1/c, constant weight, K = n+1"};
}

Report consistency_report(const Setting& s) {
  Report rep{};
  rep.lower = lower_bound(s).value;
  rep.upper = upper_bound(s);
  rep.gap = rep.upper - rep.lower;
  rep.valid = rep.gap > 0.0;
  rep.degenerate_sandwich = s.beta == 0.0 && s.lambda1c == (s.K - 1.0) * s.c * s.c;
  return rep;
}

double euclidean_ball_eigenvalue(int n, double c, double beta) {
  if (n < 1 || !(c > 0.0) || !(beta >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "Euclidean ball eigenvalue needs n >= 1, c > 0, beta >= 0");
  return beta * n * c * c + c;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::size_t row) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cell.size())
    throw Error(ErrorCode::Config, "batch row " + std::to_string(row) + ": bad number '" + cell + "'");
  return v;
}

}  // namespace

BatchSummary run_batch(std::istream& in, std::ostream& out) {
  static const std::vector<std::string> kHeader{"n", "lambda1c", "c", "K", "beta"};
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != kHeader)
    throw Error(ErrorCode::Config, "batch CSV header must be: n,lambda1c,c,K,beta");
  out << "n,lambda1c,c,K,beta,lower,upper,gap,valid,status\n";

  BatchSummary summary;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv(line);
    if (cells.size() != kHeader.size())
      throw Error(ErrorCode::Config, "batch row " + std::to_string(row) + ": expected 5 columns");
    Setting s;
    const double n = parse_number(cells[0], row);
    if (n != std::floor(n)) throw Error(ErrorCode::Config, "batch row " + std::to_string(row) + ": n must be an integer");
    s.n = static_cast<int>(n);
    s.lambda1c = parse_number(cells[1], row);
    s.c = parse_number(cells[2], row);
    s.K = parse_number(cells[3], row);
    s.beta = parse_number(cells[4], row);
    ++summary.rows;

    out << s.n << ',' << detail::format_double(s.lambda1c) << ',' << detail::format_double(s.c)
        << ',' << detail::format_double(s.K) << ',' << detail::format_double(s.beta) << ',';
    try {
      const auto rep = consistency_report(s);
      out << detail::format_double(rep.lower) << ',' << detail::format_double(rep.upper) << ','
          << detail::format_double(rep.gap) << ',' << (rep.valid ? 1 : 0) << ",ok\n";
    } catch (const Error& e) {
      ++summary.invalid;
      if (e.code() == ErrorCode::InvalidRadicand) {
        out << detail::format_double(lower_bound(s).value) << ",,,0,invalid_radicand\n";
      } else {
        out << ",,,0,invalid_setting\n";
      }
    }
  }
  return summary;
}

}  // namespace steklov::wentzell
