// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace compdesign {

enum class ErrorKind {
    Domain,
    Validation,
    Bracketing,
    Evaluation,
    DegenerateAnchor,
    CalibrationInfeasible,
    UndetectableEffect,
    InfeasibleCorrelation,
    InfeasibleEffect,
    MedianUndefined,
};

// All library failures are reported through this type. `field` names the
// offending input (a design field, a component, an arm) when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string field, const std::string& message)
        : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& field() const noexcept { return field_; }

    // Infeasibility errors describe well-formed inputs with no solution;
    // everything else is a malformed input.
    bool is_infeasibility() const noexcept {
        switch (kind_) {
        case ErrorKind::CalibrationInfeasible:
        case ErrorKind::UndetectableEffect:
        case ErrorKind::InfeasibleCorrelation:
        case ErrorKind::InfeasibleEffect:
        case ErrorKind::MedianUndefined:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
    std::string field_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace compdesign
