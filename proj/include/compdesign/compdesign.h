/* Copyright 2026 The compdesign Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the compdesign engine: design calculations for two-arm
 * trials whose primary endpoint is a composite of two components, either
 * time-to-event or binary.
 *
 * Conventions
 *   - Every fallible call returns a cd_status. On failure the thread-local
 *     cd_last_error() and cd_last_error_field() describe the problem; output
 *     arguments are left untouched.
 *   - Handles (cd_tte_law, cd_dataset) are opaque, immutable once created and
 *     safe to read from several threads. Free them with the matching _free
 *     function; passing NULL to a _free function is a no-op.
 *   - Strings returned by the library stay valid until the owning handle is
 *     freed (dataset column names) or for the life of the process (names of
 *     enumerators, version). cd_last_error() is valid until the next failing
 *     call on the same thread.
 */
#ifndef COMPDESIGN_COMPDESIGN_H
#define COMPDESIGN_COMPDESIGN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COMPDESIGN_BUILDING)
#define CD_API __declspec(dllexport)
#else
#define CD_API __declspec(dllimport)
#endif
#else
#define CD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cd_status {
    CD_OK = 0,
    CD_ERR_NULL_ARGUMENT = 1,
    CD_ERR_VALIDATION = 2,
    CD_ERR_DOMAIN = 3,
    CD_ERR_DEGENERATE_ANCHOR = 4,
    CD_ERR_NUMERIC = 5, /* root bracketing or non-finite integrand */
    CD_ERR_CALIBRATION_INFEASIBLE = 6,
    CD_ERR_UNDETECTABLE_EFFECT = 7,
    CD_ERR_INFEASIBLE_CORRELATION = 8,
    CD_ERR_INFEASIBLE_EFFECT = 9,
    CD_ERR_MEDIAN_UNDEFINED = 10,
    CD_ERR_IO = 11,
    CD_ERR_BUFFER_TOO_SMALL = 12,
    CD_ERR_INTERNAL = 13
} cd_status;

CD_API const char* cd_version(void);
CD_API const char* cd_status_name(cd_status status);
/* Nonzero for well-formed inputs that admit no solution. */
CD_API int cd_status_is_infeasibility(cd_status status);
CD_API const char* cd_last_error(void);
/* Name of the offending input, or "" when none applies. */
CD_API const char* cd_last_error_field(void);

typedef enum cd_copula { CD_COPULA_FRANK = 0, CD_COPULA_GUMBEL, CD_COPULA_CLAYTON, CD_COPULA_INDEPENDENCE } cd_copula;
typedef enum cd_association_kind { CD_ASSOC_SPEARMAN = 0, CD_ASSOC_KENDALL } cd_association_kind;
typedef enum cd_ss_formula { CD_SS_SCHOENFELD = 0, CD_SS_FREEDMAN } cd_ss_formula;
typedef enum cd_effect_measure { CD_EFFM_DIFF = 0, CD_EFFM_RR, CD_EFFM_OR } cd_effect_measure;
typedef enum cd_arm { CD_ARM_CONTROL = 0, CD_ARM_TREATED = 1 } cd_arm;

/* Case-insensitive name parsing; names match the *_name functions. */
CD_API cd_status cd_copula_parse(const char* name, cd_copula* out);
CD_API cd_status cd_association_kind_parse(const char* name, cd_association_kind* out);
CD_API cd_status cd_ss_formula_parse(const char* name, cd_ss_formula* out);
CD_API cd_status cd_effect_measure_parse(const char* name, cd_effect_measure* out);
CD_API const char* cd_copula_name(cd_copula value);
CD_API const char* cd_association_kind_name(cd_association_kind value);
CD_API const char* cd_ss_formula_name(cd_ss_formula value);
CD_API const char* cd_effect_measure_name(cd_effect_measure value);

/* ---- time-to-event ------------------------------------------------------ */

typedef struct cd_tte_design {
    double p0_e1;  /* control probability of observing endpoint 1 by followup_time */
    double p0_e2;
    double hr_e1;  /* in (0, 1] */
    double hr_e2;
    double beta_e1; /* Weibull shapes */
    double beta_e2;
    int case_id; /* 1 none fatal, 2 endpoint 2 fatal, 3 endpoint 1 fatal, 4 both */
    cd_copula copula;
    double rho; /* in [0, 1) */
    cd_association_kind rho_type;
    double followup_time;
} cd_tte_design;

typedef struct cd_quadrature {
    int subdivisions;     /* >= 16 */
    double lower_epsilon; /* in [0, 0.01) */
} cd_quadrature;

CD_API void cd_tte_design_init(cd_tte_design* design);
CD_API void cd_quadrature_init(cd_quadrature* quad);

typedef struct cd_tte_law cd_tte_law;

/* quad may be NULL for the defaults. */
CD_API cd_status cd_tte_law_calibrate(const cd_tte_design* design, const cd_quadrature* quad, cd_tte_law** out);
CD_API void cd_tte_law_free(cd_tte_law* law);
CD_API cd_status cd_tte_law_theta(const cd_tte_law* law, double* theta);
CD_API cd_status cd_tte_law_marginal(const cd_tte_law* law, cd_arm arm, int component, double* shape, double* scale);

typedef struct cd_law_point {
    double s1;
    double s2;
    double survival;
    double density;
    double hazard;
} cd_law_point;

CD_API cd_status cd_tte_law_evaluate(const cd_tte_law* law, cd_arm arm, double t, cd_law_point* out);
CD_API cd_status cd_tte_law_hr_star(const cd_tte_law* law, double t, double* out);

typedef struct cd_curve_row {
    double time;
    double s1[2]; /* indexed by cd_arm */
    double s2[2];
    double composite[2];
    double hr_star; /* evaluated at max(time, offset) */
} cd_curve_row;

/* Fills `rows` with grid_size equally spaced points on [0, followup_time]. */
CD_API cd_status cd_tte_law_curves(const cd_tte_law* law, size_t grid_size, cd_curve_row* rows);

typedef struct cd_arm_summary {
    double rmst;
    double median;
    int median_beyond_followup;
    double prob_e1;
    double prob_e2;
    double prob_ce;
} cd_arm_summary;

typedef struct cd_effect_report {
    double gahr;
    double ahr;
    double median_ratio;
    double rmst_ratio;
    cd_arm_summary arms[2];
} cd_effect_report;

CD_API cd_status cd_tte_effectsize(const cd_tte_law* law, cd_effect_report* out);

typedef struct cd_endpoint_sample_size {
    double effect;            /* HR of the endpoint, gAHR for the composite */
    double event_probability; /* averaged over arms */
    double events;
    int64_t total;            /* 0 when undetectable */
    int undetectable;
} cd_endpoint_sample_size;

typedef struct cd_sample_size_report {
    cd_endpoint_sample_size endpoint1;
    cd_endpoint_sample_size endpoint2;
    cd_endpoint_sample_size composite;
} cd_sample_size_report;

/* alpha is two-sided. Fails with CD_ERR_UNDETECTABLE_EFFECT only when the
 * composite itself has no effect; component rows flag it instead. */
CD_API cd_status cd_tte_samplesize(const cd_tte_law* law, double alpha, double power, cd_ss_formula formula,
                                   cd_sample_size_report* out);

typedef struct cd_are_report {
    double are;
    double noncentrality_relevant;
    double noncentrality_composite;
} cd_are_report;

CD_API cd_status cd_tte_are(const cd_tte_law* law, cd_are_report* out);

typedef struct cd_sensitivity_row {
    double rho;
    double are;
    int64_t n_composite;
} cd_sensitivity_row;

/* Recalibrates `design` at each association value in rho[0..count). */
CD_API cd_status cd_tte_sensitivity(const cd_tte_design* design, const cd_quadrature* quad, double alpha,
                                    double power, cd_ss_formula formula, const double* rho, size_t count,
                                    cd_sensitivity_row* out);

/* ---- binary ------------------------------------------------------------- */

typedef struct cd_cbe_design {
    double p0_e1;
    double p0_e2;
    double eff_e1;
    double eff_e2;
    cd_effect_measure effm_e1;
    cd_effect_measure effm_e2;
    cd_effect_measure effm_ce;
    double rho; /* Pearson correlation of the component indicators */
    double alpha;
    double beta;
    int unpooled;
} cd_cbe_design;

CD_API void cd_cbe_design_init(cd_cbe_design* design);

CD_API cd_status cd_cbe_prob(double p1, double p2, double rho, double* out);
CD_API cd_status cd_cbe_corr_bounds(double p1, double p2, double* lower, double* upper);

typedef struct cd_cbe_arm {
    double p_e1;
    double p_e2;
    double p_ce;
} cd_cbe_arm;

typedef struct cd_cbe_effect {
    double effect;
    cd_effect_measure measure;
    cd_cbe_arm control;
    cd_cbe_arm treated;
} cd_cbe_effect;

CD_API cd_status cd_cbe_effectsize(const cd_cbe_design* design, cd_cbe_effect* out);

typedef struct cd_cbe_sample_size {
    double per_arm_exact;
    int64_t per_arm;
    int64_t total;
    cd_cbe_effect effect;
} cd_cbe_sample_size;

CD_API cd_status cd_cbe_samplesize(const cd_cbe_design* design, cd_cbe_sample_size* out);
CD_API cd_status cd_cbe_are(const cd_cbe_design* design, double* out);

/* ---- simulated datasets ------------------------------------------------- */

typedef struct cd_dataset cd_dataset;

/* sample_size subjects per arm; control rows first. */
CD_API cd_status cd_tte_simulate(const cd_tte_law* law, size_t sample_size, uint64_t seed, cd_dataset** out);
CD_API cd_status cd_cbe_simulate(const cd_cbe_design* design, size_t sample_size, uint64_t seed, cd_dataset** out);
CD_API void cd_dataset_free(cd_dataset* data);
CD_API size_t cd_dataset_rows(const cd_dataset* data);
CD_API size_t cd_dataset_columns(const cd_dataset* data);
CD_API const char* cd_dataset_column_name(const cd_dataset* data, size_t column);
CD_API cd_status cd_dataset_value(const cd_dataset* data, size_t row, size_t column, double* out);
/* CSV with a header row. `needed` receives the length excluding the
 * terminating NUL; pass buffer = NULL to query it. */
CD_API cd_status cd_dataset_csv(const cd_dataset* data, char* buffer, size_t capacity, size_t* needed);
CD_API cd_status cd_dataset_write_csv(const cd_dataset* data, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* COMPDESIGN_COMPDESIGN_H */
