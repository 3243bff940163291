// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace compdesign {

/// Probability of observing an event by the end of follow-up.
struct AnchoredProbability {
    double value = 0.5;
    double horizon = 1.0;
};

/// Weibull law with S(t) = exp(-(t/scale)^shape).
class WeibullMarginal {
public:
    WeibullMarginal(double shape, double scale);

    /// Scale chosen so that 1 - S(horizon) equals the anchored probability.
    static WeibullMarginal from_anchor(const AnchoredProbability& anchor, double shape);

    double shape() const noexcept { return shape_; }
    double scale() const noexcept { return scale_; }

    double cumulative_hazard(double t) const;
    double survival(double t) const;
    double density(double t) const;
    // +inf at t = 0 when shape < 1.
    double hazard(double t) const;
    double quantile(double u) const;
    // Inverse of the survival function: the time at which S(t) = s.
    double time_at_survival(double s) const;

    /// Treated-arm law under proportional hazards: S'(t) = S(t)^hr.
    WeibullMarginal power_rule(double hr) const;

private:
    double shape_;
    double scale_;
};

}  // namespace compdesign
