// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/weibull.hpp"

#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace compdesign {

namespace {

void require_time(double t) {
    if (!(t >= 0.0)) {
        throw Error(ErrorKind::Domain, "t", "time must be nonnegative");
    }
}

}  // namespace

WeibullMarginal::WeibullMarginal(double shape, double scale) : shape_(shape), scale_(scale) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw Error(ErrorKind::Domain, "shape", "Weibull shape must be positive");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorKind::Domain, "scale", "Weibull scale must be positive");
    }
}

WeibullMarginal WeibullMarginal::from_anchor(const AnchoredProbability& anchor, double shape) {
    if (!(anchor.value > 0.0 && anchor.value < 1.0)) {
        throw Error(ErrorKind::DegenerateAnchor, "probability",
                    "anchored probability must lie strictly between 0 and 1");
    }
    if (!(anchor.horizon > 0.0)) {
        throw Error(ErrorKind::Domain, "followup_time", "follow-up horizon must be positive");
    }
    if (!(shape > 0.0)) {
        throw Error(ErrorKind::Domain, "shape", "Weibull shape must be positive");
    }
    const double cumhaz = -std::log1p(-anchor.value);
    return {shape, anchor.horizon / std::pow(cumhaz, 1.0 / shape)};
}

double WeibullMarginal::cumulative_hazard(double t) const {
    require_time(t);
    return std::pow(t / scale_, shape_);
}

double WeibullMarginal::survival(double t) const {
    return std::exp(-cumulative_hazard(t));
}

double WeibullMarginal::density(double t) const {
    return hazard(t) * survival(t);
}

double WeibullMarginal::hazard(double t) const {
    require_time(t);
    if (t == 0.0) {
        if (shape_ < 1.0) return std::numeric_limits<double>::infinity();
        return shape_ == 1.0 ? 1.0 / scale_ : 0.0;
    }
    return shape_ / scale_ * std::pow(t / scale_, shape_ - 1.0);
}

double WeibullMarginal::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw Error(ErrorKind::Domain, "u", "quantile level must lie in (0, 1)");
    }
    return scale_ * std::pow(-std::log1p(-u), 1.0 / shape_);
}

double WeibullMarginal::time_at_survival(double s) const {
    if (!(s > 0.0 && s <= 1.0)) {
        throw Error(ErrorKind::Domain, "s", "survival level must lie in (0, 1]");
    }
    return scale_ * std::pow(-std::log(s), 1.0 / shape_);
}

WeibullMarginal WeibullMarginal::power_rule(double hr) const {
    if (!(hr > 0.0) || !std::isfinite(hr)) {
        throw Error(ErrorKind::Domain, "hr", "hazard ratio must be positive");
    }
    return {shape_, scale_ * std::pow(hr, -1.0 / shape_)};
}

}  // namespace compdesign
