// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "compdesign/compdesign.h"

namespace compdesign::frontend {

using nlohmann::json;

// Request bodies are flat JSON objects keyed by the design field names
// (p0_e1, hr_e2, beta_e1, case, copula, rho, rho_type, followup_time, ...).
// Unknown keys, wrong types and missing required fields raise ApiError with
// CD_ERR_VALIDATION naming the key. Range checks are left to the library.

struct TTERequest {
    cd_tte_design design{};
    cd_quadrature quad{};
    double alpha = 0.05;
    double power = 0.80;
    cd_ss_formula formula = CD_SS_SCHOENFELD;
    std::size_t grid = 200;            // survival-curve points
    std::vector<double> rho_grid;      // sensitivity association values
    std::optional<std::size_t> sample_size;  // per arm, simulation only
    std::uint64_t seed = 1;
};

// Required: p0_e1, p0_e2, hr_e1, hr_e2. Everything else has a default.
TTERequest parse_tte_request(const json& body);

struct CBERequest {
    cd_cbe_design design{};
    std::optional<std::size_t> sample_size;
    std::uint64_t seed = 1;
};

// Required: p0_e1, p0_e2, eff_e1, eff_e2. `power` may replace `beta`; both is
// an error.
CBERequest parse_cbe_request(const json& body);

struct PairRequest {
    double p1 = 0.0;
    double p2 = 0.0;
    double rho = 0.0;
};

// p1 and p2 are required; rho is accepted only when `with_rho`.
PairRequest parse_pair_request(const json& body, bool with_rho);

// Key-value scenario text: one `key = value` per line, `#` starts a comment,
// hyphens in keys read as underscores. Values become booleans (true/false),
// numbers, comma-separated number lists or strings.
json parse_scenario(std::string_view text);

std::vector<double> default_rho_grid();

}  // namespace compdesign::frontend
