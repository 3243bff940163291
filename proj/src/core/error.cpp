// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/error.hpp"

namespace compdesign {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Bracketing: return "bracketing";
    case ErrorKind::Evaluation: return "evaluation";
    case ErrorKind::DegenerateAnchor: return "degenerate_anchor";
    case ErrorKind::CalibrationInfeasible: return "calibration_infeasible";
    case ErrorKind::UndetectableEffect: return "undetectable_effect";
    case ErrorKind::InfeasibleCorrelation: return "infeasible_correlation";
    case ErrorKind::InfeasibleEffect: return "infeasible_effect";
    case ErrorKind::MedianUndefined: return "median_undefined";
    }
    return "unknown";
}

}  // namespace compdesign
