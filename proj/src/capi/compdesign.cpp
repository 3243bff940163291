// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "compdesign/compdesign.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "core/binary.hpp"
#include "core/composite_law.hpp"
#include "core/design_tte.hpp"
#include "core/effects.hpp"
#include "core/error.hpp"
#include "core/simulate.hpp"

struct cd_tte_law {
    compdesign::CompositeLaw law;
};

struct cd_dataset {
    std::variant<compdesign::TTEDataset, compdesign::BinaryDataset> data;
};

namespace {

using compdesign::Error;
using compdesign::ErrorKind;

thread_local std::string last_error;
thread_local std::string last_field;

cd_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Domain: return CD_ERR_DOMAIN;
    case ErrorKind::Validation: return CD_ERR_VALIDATION;
    case ErrorKind::Bracketing:
    case ErrorKind::Evaluation: return CD_ERR_NUMERIC;
    case ErrorKind::DegenerateAnchor: return CD_ERR_DEGENERATE_ANCHOR;
    case ErrorKind::CalibrationInfeasible: return CD_ERR_CALIBRATION_INFEASIBLE;
    case ErrorKind::UndetectableEffect: return CD_ERR_UNDETECTABLE_EFFECT;
    case ErrorKind::InfeasibleCorrelation: return CD_ERR_INFEASIBLE_CORRELATION;
    case ErrorKind::InfeasibleEffect: return CD_ERR_INFEASIBLE_EFFECT;
    case ErrorKind::MedianUndefined: return CD_ERR_MEDIAN_UNDEFINED;
    }
    return CD_ERR_INTERNAL;
}

cd_status fail(cd_status status, std::string field, std::string message) {
    last_error = std::move(message);
    last_field = std::move(field);
    return status;
}

// Runs `body`, translating exceptions into status codes. Nothing escapes.
template <class F>
cd_status guarded(F&& body) {
    try {
        body();
        return CD_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.field(), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CD_ERR_INTERNAL, "", "out of memory");
    } catch (const std::exception& e) {
        return fail(CD_ERR_INTERNAL, "", e.what());
    } catch (...) {
        return fail(CD_ERR_INTERNAL, "", "unknown failure");
    }
}

#define CD_REQUIRE(ptr)                                                        \
    do {                                                                       \
        if ((ptr) == nullptr) return fail(CD_ERR_NULL_ARGUMENT, #ptr, #ptr " is NULL"); \
    } while (0)

compdesign::CopulaFamily to_core(cd_copula c) {
    switch (c) {
    case CD_COPULA_FRANK: return compdesign::CopulaFamily::Frank;
    case CD_COPULA_GUMBEL: return compdesign::CopulaFamily::Gumbel;
    case CD_COPULA_CLAYTON: return compdesign::CopulaFamily::Clayton;
    case CD_COPULA_INDEPENDENCE: return compdesign::CopulaFamily::Independence;
    }
    throw Error(ErrorKind::Validation, "copula", "unknown copula");
}

compdesign::AssociationKind to_core(cd_association_kind k) {
    switch (k) {
    case CD_ASSOC_SPEARMAN: return compdesign::AssociationKind::Spearman;
    case CD_ASSOC_KENDALL: return compdesign::AssociationKind::Kendall;
    }
    throw Error(ErrorKind::Validation, "rho_type", "unknown association kind");
}

compdesign::SampleSizeFormula to_core(cd_ss_formula f) {
    switch (f) {
    case CD_SS_SCHOENFELD: return compdesign::SampleSizeFormula::Schoenfeld;
    case CD_SS_FREEDMAN: return compdesign::SampleSizeFormula::Freedman;
    }
    throw Error(ErrorKind::Validation, "ss_formula", "unknown sample size formula");
}

compdesign::binary::EffectMeasure to_core(cd_effect_measure m, const char* field) {
    switch (m) {
    case CD_EFFM_DIFF: return compdesign::binary::EffectMeasure::Diff;
    case CD_EFFM_RR: return compdesign::binary::EffectMeasure::RR;
    case CD_EFFM_OR: return compdesign::binary::EffectMeasure::OR;
    }
    throw Error(ErrorKind::Validation, field, "unknown effect measure");
}

cd_effect_measure from_core(compdesign::binary::EffectMeasure m) {
    switch (m) {
    case compdesign::binary::EffectMeasure::Diff: return CD_EFFM_DIFF;
    case compdesign::binary::EffectMeasure::RR: return CD_EFFM_RR;
    case compdesign::binary::EffectMeasure::OR: return CD_EFFM_OR;
    }
    return CD_EFFM_DIFF;
}

compdesign::Arm to_core(cd_arm arm) {
    if (arm == CD_ARM_CONTROL) return compdesign::Arm::Control;
    if (arm == CD_ARM_TREATED) return compdesign::Arm::Treated;
    throw Error(ErrorKind::Domain, "arm", "arm must be control or treated");
}

compdesign::TTEDesign to_core(const cd_tte_design& d) {
    compdesign::TTEDesign out;
    out.p0_e1 = d.p0_e1;
    out.p0_e2 = d.p0_e2;
    out.hr_e1 = d.hr_e1;
    out.hr_e2 = d.hr_e2;
    out.beta_e1 = d.beta_e1;
    out.beta_e2 = d.beta_e2;
    out.case_id = d.case_id;
    out.copula = to_core(d.copula);
    out.association = {d.rho, to_core(d.rho_type)};
    out.followup_time = d.followup_time;
    return out;
}

compdesign::numerics::QuadratureSpec to_core(const cd_quadrature* q) {
    compdesign::numerics::QuadratureSpec out;
    if (q != nullptr) {
        out.subdivisions = q->subdivisions;
        out.lower_epsilon = q->lower_epsilon;
    }
    return out;
}

compdesign::binary::BinaryDesign to_core(const cd_cbe_design& d) {
    compdesign::binary::BinaryDesign out;
    out.p0_e1 = d.p0_e1;
    out.p0_e2 = d.p0_e2;
    out.eff_e1 = d.eff_e1;
    out.eff_e2 = d.eff_e2;
    out.effm_e1 = to_core(d.effm_e1, "effm_e1");
    out.effm_e2 = to_core(d.effm_e2, "effm_e2");
    out.effm_ce = to_core(d.effm_ce, "effm_ce");
    out.rho = d.rho;
    out.alpha = d.alpha;
    out.beta = d.beta;
    out.unpooled = d.unpooled != 0;
    return out;
}

cd_cbe_effect from_core(const compdesign::binary::CompositeEffect& e) {
    cd_cbe_effect out{};
    out.effect = e.effect;
    out.measure = from_core(e.measure);
    out.control = {e.control.e1, e.control.e2, e.control.composite};
    out.treated = {e.treated.e1, e.treated.e2, e.treated.composite};
    return out;
}

cd_endpoint_sample_size from_core(const compdesign::EndpointSampleSize& row) {
    cd_endpoint_sample_size out{};
    out.effect = row.effect;
    out.event_probability = row.event_probability;
    out.events = row.events;
    out.total = row.total;
    out.undetectable = row.error.has_value() ? 1 : 0;
    return out;
}

template <class Enum, class Parse>
cd_status parse_enum(const char* name, Enum* out, Parse parse) {
    CD_REQUIRE(name);
    CD_REQUIRE(out);
    return guarded([&] { *out = parse(name); });
}

std::string dataset_csv(const cd_dataset& data) {
    std::ostringstream os;
    std::visit([&](const auto& d) { d.write_csv(os); }, data.data);
    return os.str();
}

}  // namespace

extern "C" {

const char* cd_version(void) { return COMPDESIGN_VERSION; }

const char* cd_status_name(cd_status status) {
    switch (status) {
    case CD_OK: return "ok";
    case CD_ERR_NULL_ARGUMENT: return "null_argument";
    case CD_ERR_VALIDATION: return "validation";
    case CD_ERR_DOMAIN: return "domain";
    case CD_ERR_DEGENERATE_ANCHOR: return "degenerate_anchor";
    case CD_ERR_NUMERIC: return "numeric";
    case CD_ERR_CALIBRATION_INFEASIBLE: return "calibration_infeasible";
    case CD_ERR_UNDETECTABLE_EFFECT: return "undetectable_effect";
    case CD_ERR_INFEASIBLE_CORRELATION: return "infeasible_correlation";
    case CD_ERR_INFEASIBLE_EFFECT: return "infeasible_effect";
    case CD_ERR_MEDIAN_UNDEFINED: return "median_undefined";
    case CD_ERR_IO: return "io";
    case CD_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CD_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

int cd_status_is_infeasibility(cd_status status) {
    switch (status) {
    case CD_ERR_CALIBRATION_INFEASIBLE:
    case CD_ERR_UNDETECTABLE_EFFECT:
    case CD_ERR_INFEASIBLE_CORRELATION:
    case CD_ERR_INFEASIBLE_EFFECT:
    case CD_ERR_MEDIAN_UNDEFINED:
        return 1;
    default:
        return 0;
    }
}

const char* cd_last_error(void) { return last_error.c_str(); }
const char* cd_last_error_field(void) { return last_field.c_str(); }

cd_status cd_copula_parse(const char* name, cd_copula* out) {
    return parse_enum(name, out, [](const char* s) {
        switch (compdesign::parse_copula_family(s)) {
        case compdesign::CopulaFamily::Frank: return CD_COPULA_FRANK;
        case compdesign::CopulaFamily::Gumbel: return CD_COPULA_GUMBEL;
        case compdesign::CopulaFamily::Clayton: return CD_COPULA_CLAYTON;
        case compdesign::CopulaFamily::Independence: return CD_COPULA_INDEPENDENCE;
        }
        return CD_COPULA_FRANK;
    });
}

cd_status cd_association_kind_parse(const char* name, cd_association_kind* out) {
    return parse_enum(name, out, [](const char* s) {
        return compdesign::parse_association_kind(s) == compdesign::AssociationKind::Spearman ? CD_ASSOC_SPEARMAN
                                                                                              : CD_ASSOC_KENDALL;
    });
}

cd_status cd_ss_formula_parse(const char* name, cd_ss_formula* out) {
    return parse_enum(name, out, [](const char* s) {
        return compdesign::parse_sample_size_formula(s) == compdesign::SampleSizeFormula::Schoenfeld
                   ? CD_SS_SCHOENFELD
                   : CD_SS_FREEDMAN;
    });
}

cd_status cd_effect_measure_parse(const char* name, cd_effect_measure* out) {
    return parse_enum(name, out, [](const char* s) { return from_core(compdesign::binary::parse_effect_measure(s)); });
}

const char* cd_copula_name(cd_copula value) {
    try {
        return compdesign::to_string(to_core(value));
    } catch (...) {
        return "unknown";
    }
}

const char* cd_association_kind_name(cd_association_kind value) {
    try {
        return compdesign::to_string(to_core(value));
    } catch (...) {
        return "unknown";
    }
}

const char* cd_ss_formula_name(cd_ss_formula value) {
    try {
        return compdesign::to_string(to_core(value));
    } catch (...) {
        return "unknown";
    }
}

const char* cd_effect_measure_name(cd_effect_measure value) {
    try {
        return compdesign::binary::to_string(to_core(value, "effm"));
    } catch (...) {
        return "unknown";
    }
}

void cd_tte_design_init(cd_tte_design* design) {
    if (design == nullptr) return;
    const compdesign::TTEDesign d;
    design->p0_e1 = d.p0_e1;
    design->p0_e2 = d.p0_e2;
    design->hr_e1 = d.hr_e1;
    design->hr_e2 = d.hr_e2;
    design->beta_e1 = d.beta_e1;
    design->beta_e2 = d.beta_e2;
    design->case_id = d.case_id;
    design->copula = CD_COPULA_FRANK;
    design->rho = d.association.value;
    design->rho_type = CD_ASSOC_SPEARMAN;
    design->followup_time = d.followup_time;
}

void cd_quadrature_init(cd_quadrature* quad) {
    if (quad == nullptr) return;
    const compdesign::numerics::QuadratureSpec q;
    quad->subdivisions = q.subdivisions;
    quad->lower_epsilon = q.lower_epsilon;
}

cd_status cd_tte_law_calibrate(const cd_tte_design* design, const cd_quadrature* quad, cd_tte_law** out) {
    CD_REQUIRE(design);
    CD_REQUIRE(out);
    return guarded([&] {
        *out = new cd_tte_law{compdesign::CompositeLaw::calibrate(to_core(*design), to_core(quad))};
    });
}

void cd_tte_law_free(cd_tte_law* law) { delete law; }

cd_status cd_tte_law_theta(const cd_tte_law* law, double* theta) {
    CD_REQUIRE(law);
    CD_REQUIRE(theta);
    *theta = law->law.copula().theta();
    return CD_OK;
}

cd_status cd_tte_law_marginal(const cd_tte_law* law, cd_arm arm, int component, double* shape, double* scale) {
    CD_REQUIRE(law);
    CD_REQUIRE(shape);
    CD_REQUIRE(scale);
    return guarded([&] {
        const auto& m = law->law.marginal(to_core(arm), component);
        *shape = m.shape();
        *scale = m.scale();
    });
}

cd_status cd_tte_law_evaluate(const cd_tte_law* law, cd_arm arm, double t, cd_law_point* out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] {
        const compdesign::LawPoint p = law->law.evaluate(to_core(arm), t);
        *out = {p.s1, p.s2, p.survival, p.density, p.hazard};
    });
}

cd_status cd_tte_law_hr_star(const cd_tte_law* law, double t, double* out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] { *out = law->law.hr_star(t); });
}

cd_status cd_tte_law_curves(const cd_tte_law* law, size_t grid_size, cd_curve_row* rows) {
    CD_REQUIRE(law);
    CD_REQUIRE(rows);
    return guarded([&] {
        const compdesign::SurvivalTable table = law->law.survival_curves(grid_size);
        for (size_t i = 0; i < grid_size; ++i) {
            cd_curve_row& r = rows[i];
            r.time = table.time[i];
            for (int a = 0; a < 2; ++a) {
                r.s1[a] = table.s1[a][i];
                r.s2[a] = table.s2[a][i];
                r.composite[a] = table.composite[a][i];
            }
            r.hr_star = table.hr_star[i];
        }
    });
}

cd_status cd_tte_effectsize(const cd_tte_law* law, cd_effect_report* out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] {
        const compdesign::EffectReport r = compdesign::effectsize_report(law->law);
        cd_effect_report o{};
        o.gahr = r.gahr;
        o.ahr = r.ahr;
        o.median_ratio = r.median_ratio;
        o.rmst_ratio = r.rmst_ratio;
        for (int a = 0; a < 2; ++a) {
            const auto& s = r.arms[a];
            o.arms[a] = {s.rmst, s.median, s.median_beyond_followup ? 1 : 0, s.prob_e1, s.prob_e2, s.prob_ce};
        }
        *out = o;
    });
}

cd_status cd_tte_samplesize(const cd_tte_law* law, double alpha, double power, cd_ss_formula formula,
                            cd_sample_size_report* out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] {
        const compdesign::SampleSizeReport r = compdesign::samplesize_tte(law->law, alpha, power, to_core(formula));
        *out = {from_core(r.endpoint1), from_core(r.endpoint2), from_core(r.composite)};
    });
}

cd_status cd_tte_are(const cd_tte_law* law, cd_are_report* out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] {
        const compdesign::AREReport r = compdesign::are_tte(law->law);
        *out = {r.are, r.noncentrality_relevant, r.noncentrality_composite};
    });
}

cd_status cd_tte_sensitivity(const cd_tte_design* design, const cd_quadrature* quad, double alpha, double power,
                             cd_ss_formula formula, const double* rho, size_t count, cd_sensitivity_row* out) {
    CD_REQUIRE(design);
    if (count > 0) {
        CD_REQUIRE(rho);
        CD_REQUIRE(out);
    }
    return guarded([&] {
        const auto rows = compdesign::sensitivity_curves(to_core(*design), alpha, power, to_core(formula),
                                                         std::span<const double>(rho, count), to_core(quad));
        for (size_t i = 0; i < rows.size(); ++i) out[i] = {rows[i].rho, rows[i].are, rows[i].n_composite};
    });
}

void cd_cbe_design_init(cd_cbe_design* design) {
    if (design == nullptr) return;
    const compdesign::binary::BinaryDesign d;
    design->p0_e1 = d.p0_e1;
    design->p0_e2 = d.p0_e2;
    design->eff_e1 = d.eff_e1;
    design->eff_e2 = d.eff_e2;
    design->effm_e1 = from_core(d.effm_e1);
    design->effm_e2 = from_core(d.effm_e2);
    design->effm_ce = from_core(d.effm_ce);
    design->rho = d.rho;
    design->alpha = d.alpha;
    design->beta = d.beta;
    design->unpooled = d.unpooled ? 1 : 0;
}

cd_status cd_cbe_prob(double p1, double p2, double rho, double* out) {
    CD_REQUIRE(out);
    return guarded([&] { *out = compdesign::binary::prob_cbe(p1, p2, rho); });
}

cd_status cd_cbe_corr_bounds(double p1, double p2, double* lower, double* upper) {
    CD_REQUIRE(lower);
    CD_REQUIRE(upper);
    return guarded([&] {
        const double lo = compdesign::binary::lower_corr(p1, p2);
        const double hi = compdesign::binary::upper_corr(p1, p2);
        *lower = lo;
        *upper = hi;
    });
}

cd_status cd_cbe_effectsize(const cd_cbe_design* design, cd_cbe_effect* out) {
    CD_REQUIRE(design);
    CD_REQUIRE(out);
    return guarded([&] { *out = from_core(compdesign::binary::effectsize_cbe(to_core(*design))); });
}

cd_status cd_cbe_samplesize(const cd_cbe_design* design, cd_cbe_sample_size* out) {
    CD_REQUIRE(design);
    CD_REQUIRE(out);
    return guarded([&] {
        const auto r = compdesign::binary::samplesize_cbe(to_core(*design));
        *out = {r.per_arm_exact, r.per_arm, r.total, from_core(r.effect)};
    });
}

cd_status cd_cbe_are(const cd_cbe_design* design, double* out) {
    CD_REQUIRE(design);
    CD_REQUIRE(out);
    return guarded([&] { *out = compdesign::binary::are_cbe(to_core(*design)); });
}

cd_status cd_tte_simulate(const cd_tte_law* law, size_t sample_size, uint64_t seed, cd_dataset** out) {
    CD_REQUIRE(law);
    CD_REQUIRE(out);
    return guarded([&] { *out = new cd_dataset{compdesign::simula_tte(law->law, sample_size, seed)}; });
}

cd_status cd_cbe_simulate(const cd_cbe_design* design, size_t sample_size, uint64_t seed, cd_dataset** out) {
    CD_REQUIRE(design);
    CD_REQUIRE(out);
    return guarded([&] { *out = new cd_dataset{compdesign::simula_cbe(to_core(*design), sample_size, seed)}; });
}

void cd_dataset_free(cd_dataset* data) { delete data; }

size_t cd_dataset_rows(const cd_dataset* data) {
    if (data == nullptr) return 0;
    return std::visit([](const auto& d) { return d.rows.size(); }, data->data);
}

size_t cd_dataset_columns(const cd_dataset* data) {
    if (data == nullptr) return 0;
    return std::visit([](const auto& d) { return d.kColumns.size(); }, data->data);
}

const char* cd_dataset_column_name(const cd_dataset* data, size_t column) {
    if (data == nullptr) return nullptr;
    return std::visit(
        [&](const auto& d) -> const char* { return column < d.kColumns.size() ? d.kColumns[column] : nullptr; },
        data->data);
}

cd_status cd_dataset_value(const cd_dataset* data, size_t row, size_t column, double* out) {
    CD_REQUIRE(data);
    CD_REQUIRE(out);
    if (row >= cd_dataset_rows(data) || column >= cd_dataset_columns(data)) {
        return fail(CD_ERR_DOMAIN, "index", "row or column out of range");
    }
    if (const auto* tte = std::get_if<compdesign::TTEDataset>(&data->data)) {
        const auto& r = tte->rows[row];
        const double values[] = {r.time_e1, double(r.status_e1), r.time_e2,  double(r.status_e2),
                                 r.time_ce, double(r.status_ce), double(r.treated)};
        *out = values[column];
    } else {
        const auto& r = std::get<compdesign::BinaryDataset>(data->data).rows[row];
        const int values[] = {r.e1, r.e2, r.ce, r.treated};
        *out = values[column];
    }
    return CD_OK;
}

cd_status cd_dataset_csv(const cd_dataset* data, char* buffer, size_t capacity, size_t* needed) {
    CD_REQUIRE(data);
    CD_REQUIRE(needed);
    std::string text;
    const cd_status status = guarded([&] { text = dataset_csv(*data); });
    if (status != CD_OK) return status;
    *needed = text.size();
    if (buffer == nullptr) return CD_OK;
    if (capacity <= text.size()) return fail(CD_ERR_BUFFER_TOO_SMALL, "capacity", "buffer too small for the CSV text");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return CD_OK;
}

cd_status cd_dataset_write_csv(const cd_dataset* data, const char* path) {
    CD_REQUIRE(data);
    CD_REQUIRE(path);
    std::ofstream file(path, std::ios::binary);
    if (!file) return fail(CD_ERR_IO, "path", std::string("cannot open '") + path + "' for writing");
    file << dataset_csv(*data);
    file.flush();
    if (!file) return fail(CD_ERR_IO, "path", std::string("failed writing '") + path + "'");
    return CD_OK;
}

}  // extern "C"
