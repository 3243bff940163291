// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "core/binary.hpp"
#include "core/composite_law.hpp"

namespace compdesign {

struct TTERow {
    double time_e1;
    int status_e1;
    double time_e2;
    int status_e2;
    double time_ce;
    int status_ce;
    int treated;
};

/// Two-arm right-censored trial: control rows first, then treated rows.
/// Component times are latent (not truncated by a fatal competitor); every
/// time beyond follow-up is censored at follow-up.
struct TTEDataset {
    static constexpr std::array<const char*, 7> kColumns{"time_e1", "status_e1", "time_e2", "status_e2",
                                                         "time_ce", "status_ce", "treated"};
    double followup_time = 1.0;
    std::vector<TTERow> rows;

    void write_csv(std::ostream& out) const;
};

struct BinaryRow {
    int e1;
    int e2;
    int ce;
    int treated;
};

struct BinaryDataset {
    static constexpr std::array<const char*, 4> kColumns{"e1", "e2", "ce", "treated"};
    std::vector<BinaryRow> rows;

    void write_csv(std::ostream& out) const;
};

/// Simulates `sample_size` subjects per arm. Deterministic in `seed`.
TTEDataset simula_tte(const CompositeLaw& law, std::size_t sample_size, std::uint64_t seed);

BinaryDataset simula_cbe(const binary::BinaryDesign& design, std::size_t sample_size, std::uint64_t seed);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

}  // namespace compdesign
