// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/binary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/numerics.hpp"

namespace compdesign::binary {

namespace {

void require_interior(double p, const char* field) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorKind::Domain, field, std::string(field) + " must lie in (0, 1)");
    }
}

double correlation_scale(double p1, double p2) { return std::sqrt(p1 * (1.0 - p1) * p2 * (1.0 - p2)); }

// Bounds are compared with a little slack so that values printed from
// lower_corr/upper_corr are accepted back.
constexpr double kCorrSlack = 1e-12;

void require_feasible(double p1, double p2, double rho, const std::string& field) {
    const double lo = lower_corr(p1, p2);
    const double hi = upper_corr(p1, p2);
    if (rho < lo - kCorrSlack || rho > hi + kCorrSlack) {
        throw Error(ErrorKind::InfeasibleCorrelation, field,
                    "correlation " + std::to_string(rho) + " outside the feasible range [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

EffectMeasure parse_effect_measure(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "diff") return EffectMeasure::Diff;
    if (s == "rr") return EffectMeasure::RR;
    if (s == "or") return EffectMeasure::OR;
    throw Error(ErrorKind::Validation, "effm", "unknown effect measure '" + std::string(name) + "'");
}

const char* to_string(EffectMeasure measure) noexcept {
    switch (measure) {
    case EffectMeasure::Diff: return "diff";
    case EffectMeasure::RR: return "rr";
    case EffectMeasure::OR: return "or";
    }
    return "unknown";
}

void BinaryDesign::validate() const {
    auto check_probability = [](double p, const char* field) {
        if (!(p > 0.0 && p < 1.0)) {
            throw Error(ErrorKind::Validation, field, std::string(field) + " must lie in (0, 1)");
        }
    };
    check_probability(p0_e1, "p0_e1");
    check_probability(p0_e2, "p0_e2");
    check_probability(alpha, "alpha");
    check_probability(beta, "beta");
    if (effm_e1 != EffectMeasure::Diff && !(eff_e1 > 0.0)) {
        throw Error(ErrorKind::Validation, "eff_e1", "ratio effects must be positive");
    }
    if (effm_e2 != EffectMeasure::Diff && !(eff_e2 > 0.0)) {
        throw Error(ErrorKind::Validation, "eff_e2", "ratio effects must be positive");
    }
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw Error(ErrorKind::Validation, "rho", "rho must lie in [-1, 1]");
    }
}

double lower_corr(double p1, double p2) {
    require_interior(p1, "p1");
    require_interior(p2, "p2");
    return (std::max(0.0, p1 + p2 - 1.0) - p1 * p2) / correlation_scale(p1, p2);
}

double upper_corr(double p1, double p2) {
    require_interior(p1, "p1");
    require_interior(p2, "p2");
    return (std::min(p1, p2) - p1 * p2) / correlation_scale(p1, p2);
}

double joint_probability(double p1, double p2, double rho) {
    require_interior(p1, "p1");
    require_interior(p2, "p2");
    require_feasible(p1, p2, rho, "rho");
    const double p11 = p1 * p2 + rho * correlation_scale(p1, p2);
    return std::clamp(p11, std::max(0.0, p1 + p2 - 1.0), std::min(p1, p2));
}

double prob_cbe(double p1, double p2, double rho) { return p1 + p2 - joint_probability(p1, p2, rho); }

double treated_prob(double p0, double eff, EffectMeasure measure) {
    require_interior(p0, "p0");
    double p1 = 0.0;
    switch (measure) {
    case EffectMeasure::Diff:
        p1 = p0 + eff;
        break;
    case EffectMeasure::RR:
        if (!(eff > 0.0)) throw Error(ErrorKind::InfeasibleEffect, "eff", "relative risk must be positive");
        p1 = p0 * eff;
        break;
    case EffectMeasure::OR: {
        if (!(eff > 0.0)) throw Error(ErrorKind::InfeasibleEffect, "eff", "odds ratio must be positive");
        const double odds = eff * p0 / (1.0 - p0);
        p1 = odds / (1.0 + odds);
        break;
    }
    }
    if (!(p1 > 0.0 && p1 < 1.0)) {
        throw Error(ErrorKind::InfeasibleEffect, "eff", "treated-arm probability falls outside (0, 1)");
    }
    return p1;
}

double effect_value(double p0, double p1, EffectMeasure measure) {
    switch (measure) {
    case EffectMeasure::Diff: return p1 - p0;
    case EffectMeasure::RR: return p1 / p0;
    case EffectMeasure::OR: return (p1 / (1.0 - p1)) / (p0 / (1.0 - p0));
    }
    return 0.0;
}

CompositeEffect effectsize_cbe(const BinaryDesign& design) {
    design.validate();
    CompositeEffect out;
    out.measure = design.effm_ce;
    out.control.e1 = design.p0_e1;
    out.control.e2 = design.p0_e2;
    try {
        out.treated.e1 = treated_prob(design.p0_e1, design.eff_e1, design.effm_e1);
    } catch (const Error& e) {
        throw Error(e.kind(), "eff_e1", e.what());
    }
    try {
        out.treated.e2 = treated_prob(design.p0_e2, design.eff_e2, design.effm_e2);
    } catch (const Error& e) {
        throw Error(e.kind(), "eff_e2", e.what());
    }
    require_feasible(out.control.e1, out.control.e2, design.rho, "rho (control arm)");
    require_feasible(out.treated.e1, out.treated.e2, design.rho, "rho (treated arm)");
    out.control.composite = prob_cbe(out.control.e1, out.control.e2, design.rho);
    out.treated.composite = prob_cbe(out.treated.e1, out.treated.e2, design.rho);
    out.effect = effect_value(out.control.composite, out.treated.composite, design.effm_ce);
    return out;
}

double per_arm_sample_size(double p0, double p1, EffectMeasure measure, double alpha, double beta, bool unpooled) {
    require_interior(p0, "p0");
    require_interior(p1, "p1");
    if (std::abs(p1 - p0) < 1e-14) {
        throw Error(ErrorKind::UndetectableEffect, "effect", "the composite endpoint has no treatment effect");
    }
    const double za = numerics::normal_quantile(1.0 - alpha / 2.0);
    const double zb = numerics::normal_quantile(1.0 - beta);
    const double q0 = 1.0 - p0;
    const double q1 = 1.0 - p1;
    const double pbar = 0.5 * (p0 + p1);
    const double qbar = 1.0 - pbar;

    double null_var = 0.0;
    double alt_var = 0.0;
    double signal = 0.0;
    switch (measure) {
    case EffectMeasure::Diff:
        alt_var = p0 * q0 + p1 * q1;
        null_var = unpooled ? alt_var : 2.0 * pbar * qbar;
        signal = p1 - p0;
        break;
    case EffectMeasure::RR:
        alt_var = q0 / p0 + q1 / p1;
        null_var = unpooled ? alt_var : 2.0 * qbar / pbar;
        signal = std::log(p1 / p0);
        break;
    case EffectMeasure::OR:
        alt_var = 1.0 / (p0 * q0) + 1.0 / (p1 * q1);
        null_var = unpooled ? alt_var : 2.0 / (pbar * qbar);
        signal = std::log(effect_value(p0, p1, EffectMeasure::OR));
        break;
    }
    const double root = za * std::sqrt(null_var) + zb * std::sqrt(alt_var);
    return root * root / (signal * signal);
}

BinarySampleSize samplesize_cbe(const BinaryDesign& design) {
    BinarySampleSize out;
    out.effect = effectsize_cbe(design);
    out.per_arm_exact = per_arm_sample_size(out.effect.control.composite, out.effect.treated.composite,
                                            design.effm_ce, design.alpha, design.beta, design.unpooled);
    out.per_arm = static_cast<std::int64_t>(std::ceil(out.per_arm_exact - 1e-9));
    out.total = 2 * out.per_arm;
    return out;
}

double are_cbe(const BinaryDesign& design) {
    const CompositeEffect eff = effectsize_cbe(design);
    auto noncentrality = [](double p0, double p1) {
        return (p1 - p0) / std::sqrt(p0 * (1.0 - p0) + p1 * (1.0 - p1));
    };
    const double relevant = noncentrality(eff.control.e1, eff.treated.e1);
    if (std::abs(relevant) < 1e-14) {
        throw Error(ErrorKind::UndetectableEffect, "eff_e1", "ARE is undefined without an effect on endpoint 1");
    }
    const double composite = noncentrality(eff.control.composite, eff.treated.composite);
    const double ratio = composite / relevant;
    return ratio * ratio;
}

}  // namespace compdesign::binary
