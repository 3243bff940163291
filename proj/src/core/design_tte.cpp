// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/design_tte.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <atomic>
#include <future>
#include <thread>

#include "core/effects.hpp"
#include "core/error.hpp"

namespace compdesign {

namespace {

void validate_error_rates(double alpha, double power) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorKind::Validation, "alpha", "alpha must lie in (0, 1)");
    }
    if (!(power > 0.0 && power < 1.0)) {
        throw Error(ErrorKind::Validation, "power", "power must lie in (0, 1)");
    }
}

EndpointSampleSize endpoint_row(double effect, double probability, double alpha, double power,
                                SampleSizeFormula formula) {
    EndpointSampleSize row;
    row.effect = effect;
    row.event_probability = probability;
    try {
        row.events = events_required(effect, alpha, power, formula);
        row.total = total_sample_size(row.events, probability);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UndetectableEffect) throw;
        row.error = e.what();
    }
    return row;
}

}  // namespace

SampleSizeFormula parse_sample_size_formula(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "schoenfeld") return SampleSizeFormula::Schoenfeld;
    if (s == "freedman") return SampleSizeFormula::Freedman;
    throw Error(ErrorKind::Validation, "ss_formula", "unknown sample size formula '" + std::string(name) + "'");
}

const char* to_string(SampleSizeFormula formula) noexcept {
    return formula == SampleSizeFormula::Schoenfeld ? "schoenfeld" : "freedman";
}

double events_required(double effect, double alpha, double power, SampleSizeFormula formula) {
    validate_error_rates(alpha, power);
    if (!(effect > 0.0) || !std::isfinite(effect)) {
        throw Error(ErrorKind::Validation, "effect", "hazard ratio must be positive");
    }
    if (std::abs(std::log(effect)) < 1e-12) {
        throw Error(ErrorKind::UndetectableEffect, "effect", "a hazard ratio of 1 cannot be detected");
    }
    const double z = numerics::normal_quantile(1.0 - alpha / 2.0) + numerics::normal_quantile(power);
    if (formula == SampleSizeFormula::Schoenfeld) {
        const double log_effect = std::log(effect);
        return 4.0 * z * z / (log_effect * log_effect);
    }
    const double ratio = (1.0 + effect) / (1.0 - effect);
    return z * z * ratio * ratio;
}

std::int64_t total_sample_size(double events, double event_probability) {
    if (!(event_probability > 0.0 && event_probability <= 1.0)) {
        throw Error(ErrorKind::Validation, "probability", "event probability must lie in (0, 1]");
    }
    const double per_arm = events / (2.0 * event_probability);
    return 2 * static_cast<std::int64_t>(std::ceil(per_arm - 1e-9));
}

SampleSizeReport samplesize_tte(const CompositeLaw& law, double alpha, double power, SampleSizeFormula formula) {
    validate_error_rates(alpha, power);
    const TTEDesign& d = law.design();
    auto average = [&](int component) {
        return 0.5 * (law.observation_probability(Arm::Control, component) +
                      law.observation_probability(Arm::Treated, component));
    };
    SampleSizeReport report;
    report.alpha = alpha;
    report.power = power;
    report.formula = formula;
    report.endpoint1 = endpoint_row(d.hr_e1, average(1), alpha, power, formula);
    report.endpoint2 = endpoint_row(d.hr_e2, average(2), alpha, power, formula);

    const double pa = 0.5 * (law.event_probability(Arm::Control) + law.event_probability(Arm::Treated));
    report.composite = endpoint_row(gahr(law), pa, alpha, power, formula);
    if (report.composite.error) {
        throw Error(ErrorKind::UndetectableEffect, "hr_e1", "the composite endpoint has no treatment effect");
    }
    return report;
}

AREReport are_tte(const CompositeLaw& law) {
    const TTEDesign& d = law.design();
    if (std::abs(std::log(d.hr_e1)) < 1e-12) {
        throw Error(ErrorKind::UndetectableEffect, "hr_e1", "ARE is undefined when HR of endpoint 1 equals 1");
    }
    const double floor = law.offset_time();
    const double drift = law.integrate_time([&](double t) {
        t = std::max(t, floor);
        const LawPoint c = law.evaluate(Arm::Control, t);
        const LawPoint e = law.evaluate(Arm::Treated, t);
        return std::log(e.hazard / c.hazard) * c.density;
    });
    const double composite_mass = law.integrate_time([&](double t) {
        return law.density(Arm::Control, std::max(t, floor));
    });
    const double relevant_mass = law.observation_probability(Arm::Control, 1);

    AREReport report;
    report.noncentrality_composite = drift / std::sqrt(composite_mass);
    report.noncentrality_relevant = std::log(d.hr_e1) * std::sqrt(relevant_mass);
    const double ratio = report.noncentrality_composite / report.noncentrality_relevant;
    report.are = ratio * ratio;
    return report;
}

std::vector<SensitivityRow> sensitivity_curves(const TTEDesign& design, double alpha, double power,
                                               SampleSizeFormula formula, std::span<const double> rho_grid,
                                               const numerics::QuadratureSpec& quad) {
    validate_error_rates(alpha, power);
    for (double rho : rho_grid) {
        if (!(rho >= 0.0 && rho < 1.0)) {
            throw Error(ErrorKind::Validation, "rho_grid", "association grid values must lie in [0, 1)");
        }
    }
    std::vector<SensitivityRow> rows(rho_grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            TTEDesign d = design;
            d.association.value = rho_grid[i];
            const CompositeLaw law = CompositeLaw::calibrate(d, quad);
            rows[i].rho = rho_grid[i];
            rows[i].are = are_tte(law).are;
            rows[i].n_composite = samplesize_tte(law, alpha, power, formula).composite.total;
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(rows.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
    // get() rethrows the first failure after every worker has stopped.
    for (auto& f : pending) f.wait();
    for (auto& f : pending) f.get();
    return rows;
}

}  // namespace compdesign
