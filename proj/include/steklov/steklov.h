/* C interface to the steklov library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns an stk_status; on failure a thread-local
 * message is available from stk_last_error(). Output parameters are only
 * written on success. Buffer-returning calls follow snprintf semantics: they
 * write at most `capacity` bytes including the terminator and report the
 * full length (without terminator) through `length`.
 */
#ifndef STEKLOV_STEKLOV_H
#define STEKLOV_STEKLOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(STK_BUILDING_LIBRARY)
#define STK_API __attribute__((visibility("default")))
#else
#define STK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
  STK_OK = 0,
  STK_ERR_INVALID_ARGUMENT = 1,
  STK_ERR_NON_FINITE_CURVATURE = 2,
  STK_ERR_TOLERANCE_UNACHIEVABLE = 3,
  STK_ERR_ZERO_BEFORE_R = 4,
  STK_ERR_ORIGIN_SINGULARITY = 5,
  STK_ERR_PSI_VANISHED = 6,
  STK_ERR_DEGENERATE_TEST_FUNCTION = 7,
  STK_ERR_INVALID_RADICAND = 8,
  STK_ERR_GEODESIC_ESCAPE = 9,
  STK_ERR_CONFIG = 10,
  STK_ERR_IO = 11,
  STK_ERR_INTERNAL = 99
} stk_status;

STK_API const char* stk_status_name(stk_status status);
/* Message of the last failed call on this thread ("" if none). */
STK_API const char* stk_last_error(void);
STK_API const char* stk_version(void);

/* ---- curvature profiles ------------------------------------------------ */

typedef struct stk_profile stk_profile;

STK_API stk_status stk_profile_constant(double k0, double t_max, stk_profile** out);
/* Ring-torus (eps = 1/2) case profiles 1, 2, 3; alpha is used by case 3. */
STK_API stk_status stk_profile_torus_case(int which, double alpha, stk_profile** out);
STK_API stk_status stk_profile_parse(const char* config_text, stk_profile** out);
STK_API stk_status stk_profile_load(const char* path, stk_profile** out);
STK_API stk_status stk_profile_eval(const stk_profile* profile, double t, double* k);
STK_API double stk_profile_t_max(const stk_profile* profile);
STK_API stk_status stk_profile_to_config(const stk_profile* profile, char* buffer, size_t capacity,
                                         size_t* length);
STK_API void stk_profile_free(stk_profile* profile);

/* ---- warping functions ------------------------------------------------- */

typedef struct stk_warping stk_warping;

/* tol <= 0 selects the default (1e-10). */
STK_API stk_status stk_warping_solve(const stk_profile* profile, double t_max, double tol,
                                     stk_warping** out);
/* t_max <= 0 selects the natural domain of the space form. */
STK_API stk_status stk_warping_space_form(double k0, double t_max, stk_warping** out);
STK_API size_t stk_warping_size(const stk_warping* w);
STK_API stk_status stk_warping_node(const stk_warping* w, size_t index, double* t, double* f,
                                    double* fprime);
STK_API stk_status stk_warping_eval(const stk_warping* w, double t, double* f, double* fprime);
STK_API double stk_warping_t_end(const stk_warping* w);
/* Returns 1 and writes *l when f has a zero in (0, t_end], 0 otherwise. */
STK_API int stk_warping_first_zero(const stk_warping* w, double* l);
STK_API void stk_warping_free(stk_warping* w);

typedef enum stk_ordering { STK_FIRST_GREATER = 1, STK_EQUAL = 0, STK_SECOND_GREATER = -1 } stk_ordering;

typedef struct stk_comparison_verdict {
  double f1_at_r;
  double f2_at_r;
  double margin;
  stk_ordering ordering;
} stk_comparison_verdict;

STK_API stk_status stk_sturm_picone_compare(const stk_profile* k1, const stk_profile* k2, double r,
                                            double tol, stk_comparison_verdict* out);

/* ---- Steklov eigenvalues of model balls -------------------------------- */

typedef struct stk_steklov_result {
  double v1;
  int mode;
  double psi_at_r;
  double psiprime_at_r;
  double f_at_r;
  double lambda1c_boundary;
  size_t steps;
  double residual;
} stk_steklov_result;

/* max_mode <= 0 selects the default (8); tol <= 0 the default. */
STK_API stk_status stk_steklov_v1(const stk_warping* w, int n, double r, int max_mode, double tol,
                                  stk_steklov_result* out);
STK_API stk_status stk_steklov_mode(const stk_warping* w, int n, double r, int m, double tol,
                                    double* value, double* psi_at_r, double* psiprime_at_r);
STK_API stk_status stk_boundary_lambda1c(const stk_warping* w, int n, double r, double* out);
STK_API stk_status stk_ball_volume_area(const stk_warping* w, int n, double r, double* volume,
                                        double* boundary_area);

typedef struct stk_trace_report {
  double max_ratio;
  int pass;
  size_t trials;
  size_t discarded;
  double v1;
} stk_trace_report;

STK_API stk_status stk_trace_inequality_check(const stk_warping* w, int n, double r, int num_trials,
                                              uint64_t seed, stk_trace_report* out);

typedef struct stk_comparison_report {
  int n;
  double r;
  double v1_model_variable;
  double v1_model_constant;
  double f_at_r_variable;
  double f_at_r_constant;
  int mode;
  int sharper;
  double margin;
  int dominated;
  int consistent;
  int boundary_hypothesis_assumed;
} stk_comparison_report;

STK_API stk_status stk_comparison_report_compute(const stk_profile* k_upper, int n, double r,
                                                 double reference_k0, double tol,
                                                 stk_comparison_report* out);

/* ---- result records (JSON / CSV) ---------------------------------------- */

typedef struct stk_record {
  int n;
  double r;
  double v1;
  int mode;
  double f_at_r;
  double lambda1c_boundary;
  int has_margin;
  double margin;
} stk_record;

STK_API void stk_record_from_result(int n, double r, const stk_steklov_result* result,
                                    stk_record* out);
STK_API void stk_record_from_comparison(const stk_comparison_report* report, stk_record* out);
STK_API stk_status stk_record_to_json(const stk_record* rec, char* buffer, size_t capacity,
                                      size_t* length);
STK_API stk_status stk_record_from_json(const char* text, stk_record* out);
STK_API const char* stk_record_csv_header(void);
STK_API stk_status stk_record_to_csv(const stk_record* rec, char* buffer, size_t capacity,
                                     size_t* length);

/* ---- Wentzell bounds --------------------------------------------------- */

typedef struct stk_wentzell_setting {
  int n;
  double lambda1c;
  double c;
  double K;
  double beta;
} stk_wentzell_setting;

typedef struct stk_wentzell_report {
  double lower;
  double upper;
  double gap;
  int valid;
  int degenerate_sandwich;
} stk_wentzell_report;

STK_API stk_status stk_wentzell_upper(const stk_wentzell_setting* s, double* out);
/* The lower bound is strict. */
STK_API stk_status stk_wentzell_lower(const stk_wentzell_setting* s, double* out);
STK_API stk_status stk_wentzell_lambda1c_floor(double c, double K, double* out);
STK_API stk_status stk_wentzell_report_compute(const stk_wentzell_setting* s, stk_wentzell_report* out);
/* CSV batch; "-" reads stdin / writes stdout. */
STK_API stk_status stk_wentzell_batch(const char* input_path, const char* output_path, size_t* rows,
                                      size_t* invalid_rows);

/* ---- ring torus -------------------------------------------------------- */

STK_API stk_status stk_torus_gauss_curvature(double epsilon, double v, double* out);

typedef enum stk_curvature_sign { STK_HYPERBOLIC = -1, STK_FLAT = 0, STK_SPHERICAL = 1 } stk_curvature_sign;

STK_API stk_status stk_torus_reference_constant(int which, double r, double alpha, double* k0,
                                                stk_curvature_sign* sign);

typedef struct stk_circle_maximum {
  double max_curvature;
  double direction;
  double clairaut_drift;
  size_t geodesics;
} stk_circle_maximum;

/* Base point at (u, v) = (0, v0) of the ring torus with the given epsilon. */
STK_API stk_status stk_torus_circle_max_curvature(double epsilon, double v0, double t, int directions,
                                                  double tol, stk_circle_maximum* out);

#ifdef __cplusplus
}
#endif

#endif /* STEKLOV_STEKLOV_H */
