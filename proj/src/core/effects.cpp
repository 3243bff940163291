// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/effects.hpp"

#include <cmath>

#include "core/error.hpp"

namespace compdesign {

double gahr(const CompositeLaw& law) {
    const double floor = law.offset_time();
    const double weighted_log = law.integrate_time([&](double t) {
        t = std::max(t, floor);
        const LawPoint c = law.evaluate(Arm::Control, t);
        const LawPoint e = law.evaluate(Arm::Treated, t);
        return std::log(e.hazard / c.hazard) * 0.5 * (c.density + e.density);
    });
    const double weight = law.integrate_time([&](double t) {
        t = std::max(t, floor);
        return 0.5 * (law.density(Arm::Control, t) + law.density(Arm::Treated, t));
    });
    return std::exp(weighted_log / weight);
}

double ahr(const CompositeLaw& law) {
    const double floor = law.offset_time();
    auto share = [&](Arm arm) {
        return law.integrate_time([&](double t) {
            t = std::max(t, floor);
            const LawPoint c = law.evaluate(Arm::Control, t);
            const LawPoint e = law.evaluate(Arm::Treated, t);
            const double own = arm == Arm::Control ? c.hazard : e.hazard;
            return own / (c.hazard + e.hazard) * 0.5 * (c.density + e.density);
        });
    };
    return share(Arm::Treated) / share(Arm::Control);
}

double composite_median(const CompositeLaw& law, Arm arm) {
    const double tau = law.horizon();
    auto gap = [&](double t) { return law.survival(arm, t) - 0.5; };
    const double lo = tau * 1e-6;
    if (gap(lo) <= 0.0) return lo;
    double hi = tau;
    while (gap(hi) >= 0.0) {
        hi *= 2.0;
        if (hi > 100.0 * tau) {
            if (gap(100.0 * tau) >= 0.0) {
                throw Error(ErrorKind::MedianUndefined, arm == Arm::Control ? "control" : "treated",
                            "composite survival stays above 0.5 up to 100 times the follow-up");
            }
            hi = 100.0 * tau;
            break;
        }
    }
    return numerics::find_root(gap, lo, hi, 1e-14);
}

double median_ratio(const CompositeLaw& law) {
    return composite_median(law, Arm::Treated) / composite_median(law, Arm::Control);
}

double rmst(const CompositeLaw& law, Arm arm) {
    return law.integrate_time([&](double t) { return law.survival(arm, t); });
}

double rmst_ratio(const CompositeLaw& law) { return rmst(law, Arm::Treated) / rmst(law, Arm::Control); }

EffectReport effectsize_report(const CompositeLaw& law) {
    EffectReport report;
    report.gahr = gahr(law);
    report.ahr = ahr(law);
    for (Arm arm : {Arm::Control, Arm::Treated}) {
        auto& s = report.arms[static_cast<int>(arm)];
        s.rmst = rmst(law, arm);
        s.median = composite_median(law, arm);
        s.median_beyond_followup = s.median > law.horizon();
        s.prob_e1 = law.observation_probability(arm, 1);
        s.prob_e2 = law.observation_probability(arm, 2);
        s.prob_ce = law.event_probability(arm);
    }
    report.rmst_ratio = report.arms[1].rmst / report.arms[0].rmst;
    report.median_ratio = report.arms[1].median / report.arms[0].median;
    return report;
}

EffectReport effectsize_report(const TTEDesign& design, const numerics::QuadratureSpec& quad) {
    return effectsize_report(CompositeLaw::calibrate(design, quad));
}

}  // namespace compdesign
