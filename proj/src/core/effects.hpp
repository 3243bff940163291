// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "core/composite_law.hpp"

namespace compdesign {

struct ArmSummary {
    double rmst = 0.0;
    double median = 0.0;
    bool median_beyond_followup = false;
    double prob_e1 = 0.0;
    double prob_e2 = 0.0;
    double prob_ce = 0.0;
};

/// Composite treatment effect summaries over [0, followup_time].
struct EffectReport {
    double gahr = 1.0;
    double ahr = 1.0;
    double median_ratio = 1.0;
    double rmst_ratio = 1.0;
    std::array<ArmSummary, 2> arms;  // control, treated
};

/// Geometric average hazard ratio: exp of the mean log hazard ratio under
/// the arm-averaged composite density.
double gahr(const CompositeLaw& law);

/// Average hazard ratio of Kalbfleisch and Prentice.
double ahr(const CompositeLaw& law);

/// inf{t : S*(t) < 1/2}; the law is extended analytically beyond follow-up.
/// Throws Error(MedianUndefined) if no median exists before 100 * tau.
double composite_median(const CompositeLaw& law, Arm arm);
double median_ratio(const CompositeLaw& law);

/// Restricted mean survival time of T* up to followup_time.
double rmst(const CompositeLaw& law, Arm arm);
double rmst_ratio(const CompositeLaw& law);

EffectReport effectsize_report(const CompositeLaw& law);
EffectReport effectsize_report(const TTEDesign& design, const numerics::QuadratureSpec& quad = {});

}  // namespace compdesign
