// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/composite_law.hpp"

namespace compdesign {

enum class SampleSizeFormula { Schoenfeld, Freedman };

SampleSizeFormula parse_sample_size_formula(std::string_view name);
const char* to_string(SampleSizeFormula formula) noexcept;

/// Required number of events for a logrank comparison at two-sided level
/// alpha. Throws Error(UndetectableEffect) when effect == 1.
double events_required(double effect, double alpha, double power, SampleSizeFormula formula);

/// Total (both arms) balanced sample size, rounded up to an even number.
std::int64_t total_sample_size(double events, double event_probability);

struct EndpointSampleSize {
    double effect = 1.0;              // HR_k or gAHR
    double event_probability = 0.0;   // arm-averaged probability of observing the event
    double events = 0.0;
    std::int64_t total = 0;
    std::optional<std::string> error;  // set when the effect is null
};

struct SampleSizeReport {
    EndpointSampleSize endpoint1;
    EndpointSampleSize endpoint2;
    EndpointSampleSize composite;
    double alpha = 0.05;
    double power = 0.8;
    SampleSizeFormula formula = SampleSizeFormula::Schoenfeld;
};

SampleSizeReport samplesize_tte(const CompositeLaw& law, double alpha, double power, SampleSizeFormula formula);

struct AREReport {
    double are = 1.0;
    double noncentrality_relevant = 0.0;
    double noncentrality_composite = 0.0;
};

/// Asymptotic relative efficiency of the composite logrank test versus the
/// logrank test on endpoint 1. Values above 1 favour the composite.
AREReport are_tte(const CompositeLaw& law);

struct SensitivityRow {
    double rho = 0.0;
    double are = 0.0;
    std::int64_t n_composite = 0;
};

/// Recalibrates the design at each association value. Rows are returned in
/// grid order; the grid is evaluated on up to hardware_concurrency threads.
std::vector<SensitivityRow> sensitivity_curves(const TTEDesign& design, double alpha, double power,
                                               SampleSizeFormula formula, std::span<const double> rho_grid,
                                               const numerics::QuadratureSpec& quad = {});

}  // namespace compdesign
