// steklov: command-line front end over the C API.
//
// Exit codes: 0 ok, 2 config, 3 solver, 4 geometry, 5 bound validity.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steklov/steklov.h"

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kConfig = 2, kSolver = 3, kGeometry = 4, kBound = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(stk_status s) {
  switch (s) {
    case STK_OK: return kOk;
    case STK_ERR_INVALID_ARGUMENT:
    case STK_ERR_CONFIG:
    case STK_ERR_IO: return kConfig;
    case STK_ERR_ZERO_BEFORE_R:
    case STK_ERR_GEODESIC_ESCAPE: return kGeometry;
    case STK_ERR_INVALID_RADICAND: return kBound;
    default: return kSolver;
  }
}

void check(stk_status s) {
  if (s != STK_OK)
    throw Failure{exit_for(s), std::string(stk_status_name(s)) + ": " + stk_last_error()};
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct ProfileDeleter {
  void operator()(stk_profile* p) const { stk_profile_free(p); }
};
struct WarpingDeleter {
  void operator()(stk_warping* w) const { stk_warping_free(w); }
};
using ProfilePtr = std::unique_ptr<stk_profile, ProfileDeleter>;
using WarpingPtr = std::unique_ptr<stk_warping, WarpingDeleter>;

// Options shared by the commands that take a curvature profile.
struct Source {
  std::optional<double> constant;
  std::string profile_path;
  int torus_case = 0;
  double alpha = std::numbers::pi / 2;
};

void add_source(CLI::App* app, Source& src) {
  auto* c = app->add_option("--constant", src.constant, "constant curvature k0");
  auto* p = app->add_option("--profile", src.profile_path, "curvature profile config (JSON)");
  auto* t = app->add_option("--case", src.torus_case, "ring-torus case profile (1, 2 or 3)")
                ->check(CLI::Range(1, 3));
  c->excludes(p)->excludes(t);
  p->excludes(t);
  app->add_option("--alpha", src.alpha, "base-point angle for torus case 3");
}

// Builds the profile; a constant one is given the domain t_max.
ProfilePtr make_profile(const Source& src, double t_max) {
  stk_profile* raw = nullptr;
  if (src.constant) {
    check(stk_profile_constant(*src.constant, t_max, &raw));
  } else if (!src.profile_path.empty()) {
    check(stk_profile_load(src.profile_path.c_str(), &raw));
  } else if (src.torus_case != 0) {
    check(stk_profile_torus_case(src.torus_case, src.alpha, &raw));
  } else {
    throw Failure{kConfig, "one of --constant, --profile or --case is required"};
  }
  return ProfilePtr(raw);
}

double default_tolerance() {
  const char* env = std::getenv("STEKLOV_TOL");
  if (env == nullptr || *env == '\0') return 1e-10;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 1e-14 && tol < 1e-2))
    throw Failure{kConfig, std::string("STEKLOV_TOL must be a number in (1e-14, 1e-2), got '") + env + "'"};
  return tol;
}

double resolve_tol(const std::optional<double>& flag) {
  const double tol = flag ? *flag : default_tolerance();
  if (!(tol > 1e-14 && tol < 1e-2)) throw Failure{kConfig, "--tol must lie in (1e-14, 1e-2)"};
  return tol;
}

// ---- warp

int cmd_warp(const Source& src, std::optional<double> tmax, const std::string& format,
             std::optional<double> tol_flag) {
  const double tol = resolve_tol(tol_flag);
  if (src.constant && !tmax) throw Failure{kConfig, "--tmax is required with --constant"};
  auto profile = make_profile(src, tmax.value_or(0.0));
  const double t_max = tmax.value_or(stk_profile_t_max(profile.get()));
  stk_warping* raw = nullptr;
  check(stk_warping_solve(profile.get(), t_max, tol, &raw));
  WarpingPtr w(raw);

  double l = 0.0;
  const bool has_zero = stk_warping_first_zero(w.get(), &l) != 0;
  const size_t size = stk_warping_size(w.get());
  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["t_max"] = t_max;
    j["t_end"] = stk_warping_t_end(w.get());
    j["first_zero"] = has_zero ? ordered_json(l) : ordered_json(nullptr);
    j["t"] = ordered_json::array();
    j["f"] = ordered_json::array();
    j["fprime"] = ordered_json::array();
    for (size_t i = 0; i < size; ++i) {
      double t, f, fp;
      check(stk_warping_node(w.get(), i, &t, &f, &fp));
      j["t"].push_back(t);
      j["f"].push_back(f);
      j["fprime"].push_back(fp);
    }
    out << j.dump() << '\n';
  } else {
    const bool csv = format == "csv";
    if (csv) out << "t,f,fprime\n";
    else out << "# t f fprime\n";
    for (size_t i = 0; i < size; ++i) {
      double t, f, fp;
      check(stk_warping_node(w.get(), i, &t, &f, &fp));
      const char sep = csv ? ',' : ' ';
      out << num(t) << sep << num(f) << sep << num(fp) << '\n';
    }
    std::cerr << "first_zero: " << (has_zero ? num(l) : std::string("none")) << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---- steklov

int cmd_steklov(const Source& src, int n, const std::vector<double>& radii, int max_mode,
                const std::string& format, std::optional<double> tol_flag) {
  const double tol = resolve_tol(tol_flag);
  std::ostringstream out;
  if (format == "csv") out << stk_record_csv_header() << '\n';
  if (format == "plot-data") out << "# r v1 f_at_r\n";
  for (double r : radii) {
    if (!(r > 0.0)) throw Failure{kConfig, "--r must be positive"};
    auto profile = make_profile(src, r);
    if (stk_profile_t_max(profile.get()) < r)
      throw Failure{kConfig, "profile domain ends before r = " + num(r)};
    stk_warping* raw = nullptr;
    check(stk_warping_solve(profile.get(), r, tol, &raw));
    WarpingPtr w(raw);
    stk_steklov_result res;
    check(stk_steklov_v1(w.get(), n, r, max_mode, tol, &res));
    stk_record rec;
    stk_record_from_result(n, r, &res, &rec);
    if (format == "plot-data") {
      out << num(r) << ' ' << num(res.v1) << ' ' << num(res.f_at_r) << '\n';
      continue;
    }
    std::string text(256, '\0');
    size_t len = 0;
    check(format == "json" ? stk_record_to_json(&rec, text.data(), text.size(), &len)
                           : stk_record_to_csv(&rec, text.data(), text.size(), &len));
    if (len >= text.size()) {
      text.assign(len + 1, '\0');
      check(format == "json" ? stk_record_to_json(&rec, text.data(), text.size(), &len)
                             : stk_record_to_csv(&rec, text.data(), text.size(), &len));
    }
    text.resize(len);
    out << text << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---- torus

int cmd_torus(const Source& src, int n, std::vector<double> radii, const std::string& format,
              std::optional<double> tol_flag) {
  const double tol = resolve_tol(tol_flag);
  if (src.torus_case == 0) throw Failure{kConfig, "torus needs --case"};
  if (radii.empty()) radii = {0.3, 0.6, 0.9, 1.2};
  auto profile = make_profile(src, 0.0);

  std::ostringstream out;
  ordered_json rows = ordered_json::array();
  if (format == "csv") out << "r,k0,v1_variable_bound,v1_escobar_bound,margin,sharper\n";
  if (format == "plot-data") out << "# r v1_variable_bound v1_escobar_bound margin\n";
  for (double r : radii) {
    if (!(r > 0.0 && r < std::numbers::pi / 2)) throw Failure{kConfig, "torus radii must lie in (0, pi/2)"};
    double k0 = 0.0;
    stk_curvature_sign sign;
    check(stk_torus_reference_constant(src.torus_case, r, src.alpha, &k0, &sign));
    stk_comparison_report rep;
    check(stk_comparison_report_compute(profile.get(), n, r, k0, tol, &rep));
    if (format == "json") {
      ordered_json row;
      row["r"] = r;
      row["k0"] = k0;
      row["k0_sign"] = sign == STK_SPHERICAL ? "spherical" : sign == STK_FLAT ? "flat" : "hyperbolic";
      row["v1_variable_bound"] = rep.v1_model_variable;
      row["v1_escobar_bound"] = rep.v1_model_constant;
      row["margin"] = rep.margin;
      row["sharper"] = rep.sharper != 0;
      rows.push_back(row);
    } else if (format == "csv") {
      out << num(r) << ',' << num(k0) << ',' << num(rep.v1_model_variable) << ','
          << num(rep.v1_model_constant) << ',' << num(rep.margin) << ',' << rep.sharper << '\n';
    } else {
      out << num(r) << ' ' << num(rep.v1_model_variable) << ' ' << num(rep.v1_model_constant) << ' '
          << num(rep.margin) << '\n';
    }
  }
  if (format == "json") {
    ordered_json j;
    j["case"] = src.torus_case;
    if (src.torus_case == 3) j["alpha"] = src.alpha;
    j["n"] = n;
    j["rows"] = rows;
    out << j.dump() << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---- wentzell

int cmd_wentzell(const stk_wentzell_setting& s, const std::string& batch, const std::string& output,
                 const std::string& format) {
  if (!batch.empty()) {
    size_t rows = 0, invalid = 0;
    check(stk_wentzell_batch(batch.c_str(), output.c_str(), &rows, &invalid));
    if (invalid > 0) std::cerr << invalid << " of " << rows << " rows flagged invalid\n";
    return rows > 0 && invalid == rows ? kBound : kOk;
  }
  stk_wentzell_report rep;
  const stk_status st = stk_wentzell_report_compute(&s, &rep);
  if (st == STK_ERR_INVALID_RADICAND) {
    double lower = 0.0;
    check(stk_wentzell_lower(&s, &lower));
    std::cerr << "InvalidRadicand: " << stk_last_error() << " (lower bound " << num(lower) << ")\n";
    return kBound;
  }
  check(st);
  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["n"] = s.n;
    j["lambda1c"] = s.lambda1c;
    j["c"] = s.c;
    j["K"] = s.K;
    j["beta"] = s.beta;
    j["lower"] = rep.lower;
    j["upper"] = rep.upper;
    j["gap"] = rep.gap;
    j["valid"] = rep.valid != 0;
    j["lower_strict"] = true;
    j["degenerate_sandwich"] = rep.degenerate_sandwich != 0;
    out << j.dump() << '\n';
  } else if (format == "csv") {
    out << "n,lambda1c,c,K,beta,lower,upper,gap,valid\n"
        << s.n << ',' << num(s.lambda1c) << ',' << num(s.c) << ',' << num(s.K) << ',' << num(s.beta)
        << ',' << num(rep.lower) << ',' << num(rep.upper) << ',' << num(rep.gap) << ',' << rep.valid
        << '\n';
  } else {
    out << num(rep.lower) << ' ' << num(rep.upper) << ' ' << num(rep.gap) << '\n';
  }
  std::cout << out.str();
  return kOk;
}

// ---- profile export

int cmd_profile(const Source& src, std::optional<double> tmax) {
  if (src.constant && !tmax) throw Failure{kConfig, "--tmax is required with --constant"};
  auto profile = make_profile(src, tmax.value_or(0.0));
  size_t len = 0;
  check(stk_profile_to_config(profile.get(), nullptr, 0, &len));
  std::string text(len + 1, '\0');
  check(stk_profile_to_config(profile.get(), text.data(), text.size(), &len));
  text.resize(len);
  std::cout << text << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalues of model balls, torus curvature bounds and Wentzell estimates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(stk_version()));

  std::string format = "json";
  std::optional<double> tol;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "plot-data"}));
    sub->add_option("--tol", tol, "relative tolerance (default 1e-10 or $STEKLOV_TOL)");
  };

  Source src;
  std::optional<double> tmax;
  auto* warp = app.add_subcommand("warp", "solve f'' + k f = 0, f(0) = 0, f'(0) = 1");
  add_source(warp, src);
  warp->add_option("--tmax", tmax, "integration horizon");
  add_common(warp);

  int n = 2;
  std::vector<double> radii;
  int max_mode = 8;
  auto* stek = app.add_subcommand("steklov", "first Steklov eigenvalue of a model ball");
  add_source(stek, src);
  stek->add_option("--n", n, "dimension")->check(CLI::Range(2, 64));
  stek->add_option("--r", radii, "ball radius (repeatable)")->required();
  stek->add_option("--max-mode", max_mode, "highest angular mode in the sweep")->check(CLI::Range(1, 64));
  add_common(stek);

  auto* torus = app.add_subcommand("torus", "variable-profile vs constant-bound comparison on the ring torus");
  torus->add_option("--case", src.torus_case, "case profile (1, 2 or 3)")->required()->check(CLI::Range(1, 3));
  torus->add_option("--alpha", src.alpha, "base-point angle for case 3");
  torus->add_option("--n", n, "dimension")->check(CLI::Range(2, 64));
  torus->add_option("--r", radii, "radii in (0, pi/2) (repeatable)");
  double r_min = 0.0, r_max = 0.0;
  int r_count = 0;
  auto* rmin_opt = torus->add_option("--r-min", r_min, "first radius of an evenly spaced grid");
  auto* rmax_opt = torus->add_option("--r-max", r_max, "last radius of the grid");
  auto* rcount_opt = torus->add_option("--r-count", r_count, "number of grid points")->check(CLI::Range(1, 100000));
  rmin_opt->needs(rmax_opt, rcount_opt);
  add_common(torus);

  stk_wentzell_setting ws{2, 0.0, 1.0, 3.0, 0.0};
  std::string batch, batch_out = "-";
  auto* went = app.add_subcommand("wentzell", "Wentzell eigenvalue bounds");
  went->add_option("--n", ws.n, "boundary dimension");
  went->add_option("--lambda1c", ws.lambda1c, "first closed eigenvalue of the boundary");
  went->add_option("--c", ws.c, "second fundamental form lower bound");
  went->add_option("--K", ws.K, "Bakry-Emery dimension parameter");
  went->add_option("--beta", ws.beta, "boundary diffusion coefficient");
  went->add_option("--batch", batch, "CSV of settings (n,lambda1c,c,K,beta); '-' for stdin");
  went->add_option("--output", batch_out, "batch output path ('-' for stdout)");
  add_common(went);

  auto* prof = app.add_subcommand("profile", "print a curvature profile in config form");
  add_source(prof, src);
  prof->add_option("--tmax", tmax, "domain of a constant profile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfig;
  }

  try {
    if (*warp) return cmd_warp(src, tmax, format, tol);
    if (*stek) return cmd_steklov(src, n, radii, max_mode, format, tol);
    if (*torus) {
      if (r_count > 0) {
        if (!(r_max > r_min)) throw Failure{kConfig, "--r-max must exceed --r-min"};
        for (int i = 0; i < r_count; ++i)
          radii.push_back(r_count == 1 ? r_min : r_min + (r_max - r_min) * i / (r_count - 1));
      }
      return cmd_torus(src, n, radii, format, tol);
    }
    if (*went) {
      if (batch.empty() && ws.lambda1c == 0.0) throw Failure{kConfig, "wentzell needs --lambda1c or --batch"};
      return cmd_wentzell(ws, batch, batch_out, format);
    }
    if (*prof) return cmd_profile(src, tmax);
  } catch (const Failure& f) {
    std::cerr << "steklov: " << f.message << '\n';
    return f.code;
  }
  return kConfig;
}
