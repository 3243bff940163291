// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace compdesign::binary {

enum class EffectMeasure { Diff, RR, OR };

EffectMeasure parse_effect_measure(std::string_view name);
const char* to_string(EffectMeasure measure) noexcept;

/// Two-arm design with a binary composite of two binary components. `rho` is
/// the Pearson correlation of the component indicators, shared by both arms.
struct BinaryDesign {
    double p0_e1 = 0.1;
    double p0_e2 = 0.1;
    double eff_e1 = 0.0;
    double eff_e2 = 0.0;
    EffectMeasure effm_e1 = EffectMeasure::Diff;
    EffectMeasure effm_e2 = EffectMeasure::Diff;
    EffectMeasure effm_ce = EffectMeasure::Diff;
    double rho = 0.0;
    double alpha = 0.05;
    double beta = 0.2;
    bool unpooled = true;

    void validate() const;
};

/// Pearson-correlation range attainable by two Bernoulli variables.
double lower_corr(double p1, double p2);
double upper_corr(double p1, double p2);

/// P(X1 = 1 or X2 = 1) for correlated Bernoulli(p1), Bernoulli(p2).
double prob_cbe(double p1, double p2, double rho);

/// P(X1 = 1, X2 = 1).
double joint_probability(double p1, double p2, double rho);

/// Treated-arm probability implied by a control probability and an effect.
double treated_prob(double p0, double eff, EffectMeasure measure);

/// Value of `measure` comparing treated probability p1 against control p0.
double effect_value(double p0, double p1, EffectMeasure measure);

struct ArmProbabilities {
    double e1 = 0.0;
    double e2 = 0.0;
    double composite = 0.0;
};

struct CompositeEffect {
    double effect = 0.0;
    EffectMeasure measure = EffectMeasure::Diff;
    ArmProbabilities control;
    ArmProbabilities treated;
};

CompositeEffect effectsize_cbe(const BinaryDesign& design);

struct BinarySampleSize {
    double per_arm_exact = 0.0;
    std::int64_t per_arm = 0;
    std::int64_t total = 0;
    CompositeEffect effect;
};

/// Balanced two-proportion sample size for a (p0, p1) pair.
double per_arm_sample_size(double p0, double p1, EffectMeasure measure, double alpha, double beta, bool unpooled);

BinarySampleSize samplesize_cbe(const BinaryDesign& design);

/// Squared ratio of two-proportion test noncentralities, composite versus
/// endpoint 1.
double are_cbe(const BinaryDesign& design);

}  // namespace compdesign::binary
