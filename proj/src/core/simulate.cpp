// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/simulate.hpp"

#include <charconv>
#include <string>

#include "core/error.hpp"
#include "core/random.hpp"

namespace compdesign {

namespace {

void require_sample_size(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::Validation, "sample_size", "sample_size must be at least 1");
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void TTEDataset::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : rows) {
        out << format_double(r.time_e1) << ',' << r.status_e1 << ',' << format_double(r.time_e2) << ','
            << r.status_e2 << ',' << format_double(r.time_ce) << ',' << r.status_ce << ',' << r.treated << '\n';
    }
}

void BinaryDataset::write_csv(std::ostream& out) const {
    out << "e1,e2,ce,treated\n";
    for (const auto& r : rows) {
        out << r.e1 << ',' << r.e2 << ',' << r.ce << ',' << r.treated << '\n';
    }
}

TTEDataset simula_tte(const CompositeLaw& law, std::size_t sample_size, std::uint64_t seed) {
    require_sample_size(sample_size);
    const double tau = law.horizon();
    TTEDataset data;
    data.followup_time = tau;
    data.rows.reserve(2 * sample_size);
    Rng rng(seed);
    for (Arm arm : {Arm::Control, Arm::Treated}) {
        const auto& m1 = law.marginal(arm, 1);
        const auto& m2 = law.marginal(arm, 2);
        for (std::size_t i = 0; i < sample_size; ++i) {
            // (S1(T1), S2(T2)) is distributed as the copula.
            const auto [u, v] = law.copula().draw(rng);
            const double t1 = m1.time_at_survival(u);
            const double t2 = m2.time_at_survival(v);
            TTERow row{};
            row.status_e1 = t1 < tau ? 1 : 0;
            row.time_e1 = row.status_e1 ? t1 : tau;
            row.status_e2 = t2 < tau ? 1 : 0;
            row.time_e2 = row.status_e2 ? t2 : tau;
            row.time_ce = std::min(row.time_e1, row.time_e2);
            row.status_ce = std::max(row.status_e1, row.status_e2);
            row.treated = arm == Arm::Treated ? 1 : 0;
            data.rows.push_back(row);
        }
    }
    return data;
}

BinaryDataset simula_cbe(const binary::BinaryDesign& design, std::size_t sample_size, std::uint64_t seed) {
    require_sample_size(sample_size);
    const binary::CompositeEffect eff = binary::effectsize_cbe(design);
    BinaryDataset data;
    data.rows.reserve(2 * sample_size);
    Rng rng(seed);
    for (int treated : {0, 1}) {
        const auto& p = treated ? eff.treated : eff.control;
        const double p11 = binary::joint_probability(p.e1, p.e2, design.rho);
        const double p10 = p.e1 - p11;
        const double p01 = p.e2 - p11;
        for (std::size_t i = 0; i < sample_size; ++i) {
            const double x = rng.uniform();
            BinaryRow row{0, 0, 0, treated};
            if (x < p11) {
                row.e1 = row.e2 = 1;
            } else if (x < p11 + p10) {
                row.e1 = 1;
            } else if (x < p11 + p10 + p01) {
                row.e2 = 1;
            }
            row.ce = std::max(row.e1, row.e2);
            data.rows.push_back(row);
        }
    }
    return data;
}

}  // namespace compdesign
