// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "frontend/request.hpp"

namespace compdesign::frontend {

enum class Operation {
    EffectsizeTTE,
    SamplesizeTTE,
    AreTTE,
    CurvesTTE,
    SimulateTTE,
    ProbCBE,
    CorrBounds,
    EffectsizeCBE,
    SamplesizeCBE,
    AreCBE,
    SimulateCBE,
};

// Names match the CLI subcommands, e.g. "samplesize-tte", "corr-bounds".
std::optional<Operation> parse_operation(std::string_view name);
const char* to_string(Operation op) noexcept;
bool is_tte(Operation op) noexcept;

// Size caps on grids and simulated samples. Exceeding one raises LimitExceeded.
struct Limits {
    std::size_t max_grid = std::numeric_limits<std::size_t>::max();
    std::size_t max_sample_size = std::numeric_limits<std::size_t>::max();
};

class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(std::string field, const std::string& message)
        : std::runtime_error(message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Validates `body`, runs the calculation through the C API and returns the
// result document. Deterministic: equal bodies give equal documents.
json compute(Operation op, const json& body, const Limits& limits = {});

}  // namespace compdesign::frontend
