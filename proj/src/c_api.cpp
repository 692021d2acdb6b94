#include "steklov/steklov.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "steklov/error.hpp"
#include "steklov/model.hpp"
#include "steklov/profile.hpp"
#include "steklov/records.hpp"
#include "steklov/torus.hpp"
#include "steklov/warping.hpp"
#include "steklov/wentzell.hpp"

struct stk_profile {
  steklov::CurvatureProfile value;
};

struct stk_warping {
  steklov::WarpingFunction value;
};

namespace {

thread_local std::string last_error;

stk_status map_code(steklov::ErrorCode code) {
  using steklov::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return STK_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonFiniteCurvature: return STK_ERR_NON_FINITE_CURVATURE;
    case ErrorCode::ToleranceUnachievable: return STK_ERR_TOLERANCE_UNACHIEVABLE;
    case ErrorCode::ZeroBeforeR: return STK_ERR_ZERO_BEFORE_R;
    case ErrorCode::OriginSingularity: return STK_ERR_ORIGIN_SINGULARITY;
    case ErrorCode::PsiVanished: return STK_ERR_PSI_VANISHED;
    case ErrorCode::DegenerateTestFunction: return STK_ERR_DEGENERATE_TEST_FUNCTION;
    case ErrorCode::InvalidRadicand: return STK_ERR_INVALID_RADICAND;
    case ErrorCode::GeodesicEscape: return STK_ERR_GEODESIC_ESCAPE;
    case ErrorCode::Config: return STK_ERR_CONFIG;
    case ErrorCode::Io: return STK_ERR_IO;
  }
  return STK_ERR_INTERNAL;
}

template <class F>
stk_status guarded(F&& body) noexcept {
  try {
    body();
    last_error.clear();
    return STK_OK;
  } catch (const steklov::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return STK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return STK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw steklov::Error(steklov::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

void copy_out(const std::string& s, char* buffer, size_t capacity, size_t* length) {
  if (length) *length = s.size();
  if (buffer && capacity > 0) {
    const size_t n = std::min(capacity - 1, s.size());
    std::memcpy(buffer, s.data(), n);
    buffer[n] = '\0';
  }
}

double tol_or_default(double tol) { return tol > 0.0 ? tol : steklov::kDefaultTolerance; }

steklov::ModelBall make_ball(const stk_warping* w, int n, double r) {
  require(w, "warping");
  return steklov::ModelBall(n, r, w->value);
}

steklov::SteklovRecord to_cpp(const stk_record& r) {
  steklov::SteklovRecord rec{r.n, r.r, r.v1, r.mode, r.f_at_r, r.lambda1c_boundary, std::nullopt};
  if (r.has_margin) rec.margin = r.margin;
  return rec;
}

steklov::wentzell::Setting to_cpp(const stk_wentzell_setting& s) { return {s.n, s.lambda1c, s.c, s.K, s.beta}; }

}  // namespace

extern "C" {

STK_API const char* stk_status_name(stk_status status) {
  switch (status) {
    case STK_OK: return "ok";
    case STK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case STK_ERR_NON_FINITE_CURVATURE: return "NonFiniteCurvature";
    case STK_ERR_TOLERANCE_UNACHIEVABLE: return "ToleranceUnachievable";
    case STK_ERR_ZERO_BEFORE_R: return "ZeroBeforeR";
    case STK_ERR_ORIGIN_SINGULARITY: return "OriginSingularity";
    case STK_ERR_PSI_VANISHED: return "PsiVanished";
    case STK_ERR_DEGENERATE_TEST_FUNCTION: return "DegenerateTestFunction";
    case STK_ERR_INVALID_RADICAND: return "InvalidRadicand";
    case STK_ERR_GEODESIC_ESCAPE: return "GeodesicEscape";
    case STK_ERR_CONFIG: return "Config";
    case STK_ERR_IO: return "Io";
    case STK_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

STK_API const char* stk_last_error(void) { return last_error.c_str(); }

STK_API const char* stk_version(void) { return "1.0.0"; }

// ---- profiles

STK_API stk_status stk_profile_constant(double k0, double t_max, stk_profile** out) {
  return guarded([&] {
    require(out, "out");
    *out = new stk_profile{steklov::CurvatureProfile::constant(k0, t_max)};
  });
}

STK_API stk_status stk_profile_torus_case(int which, double alpha, stk_profile** out) {
  return guarded([&] {
    require(out, "out");
    *out = new stk_profile{steklov::torus::case_profile(which, alpha)};
  });
}

STK_API stk_status stk_profile_parse(const char* config_text, stk_profile** out) {
  return guarded([&] {
    require(config_text, "config_text");
    require(out, "out");
    *out = new stk_profile{steklov::parse_profile_config(config_text)};
  });
}

STK_API stk_status stk_profile_load(const char* path, stk_profile** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new stk_profile{steklov::load_profile_config(path)};
  });
}

STK_API stk_status stk_profile_eval(const stk_profile* profile, double t, double* k) {
  return guarded([&] {
    require(profile, "profile");
    require(k, "k");
    *k = profile->value(t);
  });
}

STK_API double stk_profile_t_max(const stk_profile* profile) {
  return profile ? profile->value.t_max() : 0.0;
}

STK_API stk_status stk_profile_to_config(const stk_profile* profile, char* buffer, size_t capacity,
                                         size_t* length) {
  return guarded([&] {
    require(profile, "profile");
    copy_out(steklov::to_profile_config(profile->value), buffer, capacity, length);
  });
}

STK_API void stk_profile_free(stk_profile* profile) { delete profile; }

// ---- warping

STK_API stk_status stk_warping_solve(const stk_profile* profile, double t_max, double tol,
                                     stk_warping** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = new stk_warping{steklov::solve_warping(profile->value, t_max, tol_or_default(tol))};
  });
}

STK_API stk_status stk_warping_space_form(double k0, double t_max, stk_warping** out) {
  return guarded([&] {
    require(out, "out");
    std::optional<double> end;
    if (t_max > 0.0) end = t_max;
    *out = new stk_warping{steklov::space_form_warping(k0, end)};
  });
}

STK_API size_t stk_warping_size(const stk_warping* w) { return w ? w->value.grid().size() : 0; }

STK_API stk_status stk_warping_node(const stk_warping* w, size_t index, double* t, double* f,
                                    double* fprime) {
  return guarded([&] {
    require(w, "warping");
    if (index >= w->value.grid().size())
      throw steklov::Error(steklov::ErrorCode::InvalidArgument, "node index out of range");
    if (t) *t = w->value.grid()[index];
    if (f) *f = w->value.f_values()[index];
    if (fprime) *fprime = w->value.fprime_values()[index];
  });
}

STK_API stk_status stk_warping_eval(const stk_warping* w, double t, double* f, double* fprime) {
  return guarded([&] {
    require(w, "warping");
    const auto s = w->value.eval(t);
    if (f) *f = s.f;
    if (fprime) *fprime = s.fprime;
  });
}

STK_API double stk_warping_t_end(const stk_warping* w) { return w ? w->value.t_end() : 0.0; }

STK_API int stk_warping_first_zero(const stk_warping* w, double* l) {
  if (!w) return 0;
  const auto z = steklov::first_zero(w->value);
  if (z && l) *l = *z;
  return z ? 1 : 0;
}

STK_API void stk_warping_free(stk_warping* w) { delete w; }

STK_API stk_status stk_sturm_picone_compare(const stk_profile* k1, const stk_profile* k2, double r,
                                            double tol, stk_comparison_verdict* out) {
  return guarded([&] {
    require(k1, "k1");
    require(k2, "k2");
    require(out, "out");
    const auto v = steklov::sturm_picone_compare(k1->value, k2->value, r, tol_or_default(tol));
    out->f1_at_r = v.f1_at_r;
    out->f2_at_r = v.f2_at_r;
    out->margin = v.margin;
    out->ordering = v.ordering == steklov::Ordering::Equal        ? STK_EQUAL
                    : v.ordering == steklov::Ordering::FirstGreater ? STK_FIRST_GREATER
                                                                    : STK_SECOND_GREATER;
  });
}

// ---- Steklov

STK_API stk_status stk_steklov_v1(const stk_warping* w, int n, double r, int max_mode, double tol,
                                  stk_steklov_result* out) {
  return guarded([&] {
    require(out, "out");
    const auto ball = make_ball(w, n, r);
    const auto res = steklov::steklov_v1(ball, max_mode > 0 ? max_mode : steklov::kDefaultMaxMode,
                                         tol_or_default(tol));
    *out = {res.v1,        res.mode,
            res.psi_at_r,  res.psiprime_at_r,
            ball.f_at_r(), steklov::boundary_lambda1c(ball),
            res.diagnostics.steps, res.diagnostics.residual};
  });
}

STK_API stk_status stk_steklov_mode(const stk_warping* w, int n, double r, int m, double tol,
                                    double* value, double* psi_at_r, double* psiprime_at_r) {
  return guarded([&] {
    const auto res = steklov::steklov_mode_logderivative(make_ball(w, n, r), m, tol_or_default(tol));
    if (value) *value = res.value;
    if (psi_at_r) *psi_at_r = res.psi_at_r;
    if (psiprime_at_r) *psiprime_at_r = res.psiprime_at_r;
  });
}

STK_API stk_status stk_boundary_lambda1c(const stk_warping* w, int n, double r, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = steklov::boundary_lambda1c(make_ball(w, n, r));
  });
}

STK_API stk_status stk_ball_volume_area(const stk_warping* w, int n, double r, double* volume,
                                        double* boundary_area) {
  return guarded([&] {
    const auto va = steklov::ball_volume_and_area(make_ball(w, n, r));
    if (volume) *volume = va.volume;
    if (boundary_area) *boundary_area = va.boundary_area;
  });
}

STK_API stk_status stk_trace_inequality_check(const stk_warping* w, int n, double r, int num_trials,
                                              uint64_t seed, stk_trace_report* out) {
  return guarded([&] {
    require(out, "out");
    const auto rep = steklov::trace_inequality_check(make_ball(w, n, r), num_trials, seed);
    *out = {rep.max_ratio, rep.pass ? 1 : 0, rep.trials, rep.discarded, rep.v1};
  });
}

STK_API stk_status stk_comparison_report_compute(const stk_profile* k_upper, int n, double r,
                                                 double reference_k0, double tol,
                                                 stk_comparison_report* out) {
  return guarded([&] {
    require(k_upper, "k_upper");
    require(out, "out");
    const auto rep = steklov::comparison_report(k_upper->value, n, r, reference_k0, tol_or_default(tol));
    *out = {rep.n,
            rep.r,
            rep.v1_model_variable,
            rep.v1_model_constant,
            rep.f_at_r_variable,
            rep.f_at_r_constant,
            rep.mode,
            rep.sharper ? 1 : 0,
            rep.margin,
            rep.dominated ? 1 : 0,
            rep.consistent ? 1 : 0,
            rep.boundary_hypothesis_assumed ? 1 : 0};
  });
}

// ---- records

STK_API void stk_record_from_result(int n, double r, const stk_steklov_result* result, stk_record* out) {
  if (!result || !out) return;
  *out = {n, r, result->v1, result->mode, result->f_at_r, result->lambda1c_boundary, 0, 0.0};
}

STK_API void stk_record_from_comparison(const stk_comparison_report* report, stk_record* out) {
  if (!report || !out) return;
  const double f = report->f_at_r_variable;
  *out = {report->n, report->r, report->v1_model_variable, report->mode, f,
          (report->n - 1) / (f * f), 1, report->margin};
}

STK_API stk_status stk_record_to_json(const stk_record* rec, char* buffer, size_t capacity,
                                      size_t* length) {
  return guarded([&] {
    require(rec, "record");
    copy_out(steklov::to_json(to_cpp(*rec)), buffer, capacity, length);
  });
}

STK_API stk_status stk_record_from_json(const char* text, stk_record* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const auto rec = steklov::record_from_json(text);
    *out = {rec.n, rec.r, rec.v1, rec.mode, rec.f_at_r, rec.lambda1c_boundary, rec.margin ? 1 : 0,
            rec.margin.value_or(0.0)};
  });
}

STK_API const char* stk_record_csv_header(void) {
  static const std::string header = steklov::record_csv_header();
  return header.c_str();
}

STK_API stk_status stk_record_to_csv(const stk_record* rec, char* buffer, size_t capacity,
                                     size_t* length) {
  return guarded([&] {
    require(rec, "record");
    copy_out(steklov::to_csv_row(to_cpp(*rec)), buffer, capacity, length);
  });
}

// ---- Wentzell

STK_API stk_status stk_wentzell_upper(const stk_wentzell_setting* s, double* out) {
  return guarded([&] {
    require(s, "setting");
    require(out, "out");
    *out = steklov::wentzell::upper_bound(to_cpp(*s));
  });
}

STK_API stk_status stk_wentzell_lower(const stk_wentzell_setting* s, double* out) {
  return guarded([&] {
    require(s, "setting");
    require(out, "out");
    *out = steklov::wentzell::lower_bound(to_cpp(*s)).value;
  });
}

STK_API stk_status stk_wentzell_lambda1c_floor(double c, double K, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = steklov::wentzell::lambda1c_floor(c, K).value;
  });
}

STK_API stk_status stk_wentzell_report_compute(const stk_wentzell_setting* s, stk_wentzell_report* out) {
  return guarded([&] {
    require(s, "setting");
    require(out, "out");
    const auto rep = steklov::wentzell::consistency_report(to_cpp(*s));
    *out = {rep.lower, rep.upper, rep.gap, rep.valid ? 1 : 0, rep.degenerate_sandwich ? 1 : 0};
  });
}

STK_API stk_status stk_wentzell_batch(const char* input_path, const char* output_path, size_t* rows,
                                      size_t* invalid_rows) {
  return guarded([&] {
    require(input_path, "input_path");
    require(output_path, "output_path");
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;
    if (std::strcmp(input_path, "-") != 0) {
      in_file.open(input_path);
      if (!in_file) throw steklov::Error(steklov::ErrorCode::Io, std::string("cannot open ") + input_path);
      in = &in_file;
    }
    if (std::strcmp(output_path, "-") != 0) {
      out_file.open(output_path);
      if (!out_file) throw steklov::Error(steklov::ErrorCode::Io, std::string("cannot open ") + output_path);
      out = &out_file;
    }
    const auto summary = steklov::wentzell::run_batch(*in, *out);
    out->flush();
    if (rows) *rows = summary.rows;
    if (invalid_rows) *invalid_rows = summary.invalid;
  });
}

// ---- torus

STK_API stk_status stk_torus_gauss_curvature(double epsilon, double v, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = steklov::torus::gauss_curvature(steklov::torus::SurfaceOfRevolution::ring_torus(epsilon), v);
  });
}

STK_API stk_status stk_torus_reference_constant(int which, double r, double alpha, double* k0,
                                                stk_curvature_sign* sign) {
  return guarded([&] {
    const auto ref = steklov::torus::escobar_reference_constant(which, r, alpha);
    if (k0) *k0 = ref.k0;
    if (sign)
      *sign = ref.sign == steklov::torus::CurvatureSign::Flat        ? STK_FLAT
              : ref.sign == steklov::torus::CurvatureSign::Spherical ? STK_SPHERICAL
                                                                     : STK_HYPERBOLIC;
  });
}

STK_API stk_status stk_torus_circle_max_curvature(double epsilon, double v0, double t, int directions,
                                                  double tol, stk_circle_maximum* out) {
  return guarded([&] {
    require(out, "out");
    const auto surface = steklov::torus::SurfaceOfRevolution::ring_torus(epsilon);
    const auto res = steklov::torus::geodesic_circle_max_curvature(
        surface, steklov::torus::BasePoint::generic(v0), t, directions, tol > 0.0 ? tol : 1e-10);
    *out = {res.max_curvature, res.direction, res.clairaut_drift, res.geodesics};
  });
}

}  // extern "C"
