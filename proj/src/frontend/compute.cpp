// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "frontend/compute.hpp"

#include <array>
#include <string>
#include <vector>

#include "frontend/api.hpp"

namespace compdesign::frontend {

namespace {

struct OperationName {
    Operation op;
    std::string_view name;
};

constexpr std::array<OperationName, 11> kOperations{{
    {Operation::EffectsizeTTE, "effectsize-tte"},
    {Operation::SamplesizeTTE, "samplesize-tte"},
    {Operation::AreTTE, "are-tte"},
    {Operation::CurvesTTE, "curves-tte"},
    {Operation::SimulateTTE, "simulate-tte"},
    {Operation::ProbCBE, "prob-cbe"},
    {Operation::CorrBounds, "corr-bounds"},
    {Operation::EffectsizeCBE, "effectsize-cbe"},
    {Operation::SamplesizeCBE, "samplesize-cbe"},
    {Operation::AreCBE, "are-cbe"},
    {Operation::SimulateCBE, "simulate-cbe"},
}};

void enforce(std::size_t value, std::size_t cap, const char* field) {
    if (value > cap) {
        throw LimitExceeded(field, std::string(field) + " exceeds the limit of " + std::to_string(cap));
    }
}

std::size_t require_sample_size(const std::optional<std::size_t>& n, const Limits& limits) {
    if (!n) throw ApiError(CD_ERR_VALIDATION, "sample_size", "missing required field 'sample_size'");
    enforce(*n, limits.max_sample_size, "sample_size");
    return *n;
}

json arm_summary(const cd_arm_summary& s) {
    return {{"rmst", s.rmst},
            {"median", s.median},
            {"median_beyond_followup", s.median_beyond_followup != 0},
            {"prob_e1", s.prob_e1},
            {"prob_e2", s.prob_e2},
            {"prob_ce", s.prob_ce}};
}

json endpoint_detail(const cd_endpoint_sample_size& row) {
    json out = {{"effect", row.effect},
                {"event_probability", row.event_probability},
                {"undetectable", row.undetectable != 0}};
    if (row.undetectable) {
        out["events"] = nullptr;
        out["total"] = nullptr;
    } else {
        out["events"] = row.events;
        out["total"] = row.total;
    }
    return out;
}

json cbe_arm(const cd_cbe_arm& a) { return {{"e1", a.p_e1}, {"e2", a.p_e2}, {"composite", a.p_ce}}; }

json cbe_effect(const cd_cbe_effect& e) {
    return {{"effect", e.effect},
            {"effm_ce", cd_effect_measure_name(e.measure)},
            {"control", cbe_arm(e.control)},
            {"treated", cbe_arm(e.treated)}};
}

// Time columns stay doubles; indicator columns become integers.
json dataset_document(const cd_dataset* data) {
    const std::size_t rows = cd_dataset_rows(data);
    const std::size_t cols = cd_dataset_columns(data);
    json columns = json::array();
    std::vector<bool> is_time(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const std::string name = cd_dataset_column_name(data, c);
        is_time[c] = name.rfind("time_", 0) == 0;
        columns.push_back(name);
    }
    json table = json::array();
    for (std::size_t r = 0; r < rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < cols; ++c) {
            double v = 0.0;
            check(cd_dataset_value(data, r, c, &v));
            if (is_time[c]) {
                row.push_back(v);
            } else {
                row.push_back(static_cast<int>(v));
            }
        }
        table.push_back(std::move(row));
    }
    return {{"columns", std::move(columns)}, {"rows", std::move(table)}};
}

json effectsize_tte(const TTERequest& r) {
    const LawHandle law = calibrate(r.design, r.quad);
    cd_effect_report e{};
    check(cd_tte_effectsize(law.get(), &e));
    return {{"gahr", e.gahr},
            {"ahr", e.ahr},
            {"rmst_ratio", e.rmst_ratio},
            {"median_ratio", e.median_ratio},
            {"control", arm_summary(e.arms[CD_ARM_CONTROL])},
            {"treated", arm_summary(e.arms[CD_ARM_TREATED])}};
}

json samplesize_tte(const TTERequest& r) {
    const LawHandle law = calibrate(r.design, r.quad);
    cd_sample_size_report s{};
    check(cd_tte_samplesize(law.get(), r.alpha, r.power, r.formula, &s));
    auto total = [](const cd_endpoint_sample_size& row) -> json {
        return row.undetectable ? json(nullptr) : json(row.total);
    };
    return {{"endpoint1", total(s.endpoint1)},
            {"endpoint2", total(s.endpoint2)},
            {"composite", total(s.composite)},
            {"alpha", r.alpha},
            {"power", r.power},
            {"ss_formula", cd_ss_formula_name(r.formula)},
            {"details",
             {{"endpoint1", endpoint_detail(s.endpoint1)},
              {"endpoint2", endpoint_detail(s.endpoint2)},
              {"composite", endpoint_detail(s.composite)}}}};
}

json are_tte(const TTERequest& r) {
    const LawHandle law = calibrate(r.design, r.quad);
    cd_are_report a{};
    check(cd_tte_are(law.get(), &a));
    return {{"are", a.are},
            {"noncentrality_relevant", a.noncentrality_relevant},
            {"noncentrality_composite", a.noncentrality_composite}};
}

json curves_tte(const TTERequest& r, const Limits& limits) {
    enforce(r.grid, limits.max_grid, "grid");
    enforce(r.rho_grid.size(), limits.max_grid, "rho_grid");
    const LawHandle law = calibrate(r.design, r.quad);
    std::vector<cd_curve_row> rows(r.grid);
    check(cd_tte_law_curves(law.get(), r.grid, rows.data()));
    std::vector<cd_sensitivity_row> sens(r.rho_grid.size());
    check(cd_tte_sensitivity(&r.design, &r.quad, r.alpha, r.power, r.formula, r.rho_grid.data(), r.rho_grid.size(),
                             sens.data()));

    json time = json::array(), hr = json::array();
    std::array<json, 2> s1{json::array(), json::array()}, s2{json::array(), json::array()},
        composite{json::array(), json::array()};
    for (const auto& row : rows) {
        time.push_back(row.time);
        hr.push_back(row.hr_star);
        for (int a = 0; a < 2; ++a) {
            s1[a].push_back(row.s1[a]);
            s2[a].push_back(row.s2[a]);
            composite[a].push_back(row.composite[a]);
        }
    }
    json rho = json::array(), are = json::array(), n = json::array();
    for (const auto& row : sens) {
        rho.push_back(row.rho);
        are.push_back(row.are);
        n.push_back(row.n_composite);
    }
    auto arms = [](const std::array<json, 2>& v) { return json{{"control", v[0]}, {"treated", v[1]}}; };
    return {{"time", std::move(time)},
            {"survival", arms(composite)},
            {"s1", arms(s1)},
            {"s2", arms(s2)},
            {"hr_star", std::move(hr)},
            {"sensitivity", {{"rho", std::move(rho)}, {"are", std::move(are)}, {"n_composite", std::move(n)}}}};
}

json simulate_tte(const TTERequest& r, const Limits& limits) {
    const std::size_t n = require_sample_size(r.sample_size, limits);
    const LawHandle law = calibrate(r.design, r.quad);
    cd_dataset* raw = nullptr;
    check(cd_tte_simulate(law.get(), n, r.seed, &raw));
    const DatasetHandle data(raw);
    json doc = dataset_document(data.get());
    doc["followup_time"] = r.design.followup_time;
    doc["seed"] = r.seed;
    return doc;
}

json samplesize_cbe(const CBERequest& r) {
    cd_cbe_sample_size s{};
    check(cd_cbe_samplesize(&r.design, &s));
    return {{"per_arm", s.per_arm},
            {"total", s.total},
            {"per_arm_exact", s.per_arm_exact},
            {"alpha", r.design.alpha},
            {"beta", r.design.beta},
            {"unpooled", r.design.unpooled != 0},
            {"effect", cbe_effect(s.effect)}};
}

json simulate_cbe(const CBERequest& r, const Limits& limits) {
    const std::size_t n = require_sample_size(r.sample_size, limits);
    cd_dataset* raw = nullptr;
    check(cd_cbe_simulate(&r.design, n, r.seed, &raw));
    const DatasetHandle data(raw);
    json doc = dataset_document(data.get());
    doc["seed"] = r.seed;
    return doc;
}

}  // namespace

std::optional<Operation> parse_operation(std::string_view name) {
    for (const auto& entry : kOperations) {
        if (entry.name == name) return entry.op;
    }
    return std::nullopt;
}

const char* to_string(Operation op) noexcept {
    for (const auto& entry : kOperations) {
        if (entry.op == op) return entry.name.data();
    }
    return "unknown";
}

bool is_tte(Operation op) noexcept {
    switch (op) {
    case Operation::EffectsizeTTE:
    case Operation::SamplesizeTTE:
    case Operation::AreTTE:
    case Operation::CurvesTTE:
    case Operation::SimulateTTE:
        return true;
    default:
        return false;
    }
}

json compute(Operation op, const json& body, const Limits& limits) {
    switch (op) {
    case Operation::EffectsizeTTE: return effectsize_tte(parse_tte_request(body));
    case Operation::SamplesizeTTE: return samplesize_tte(parse_tte_request(body));
    case Operation::AreTTE: return are_tte(parse_tte_request(body));
    case Operation::CurvesTTE: return curves_tte(parse_tte_request(body), limits);
    case Operation::SimulateTTE: return simulate_tte(parse_tte_request(body), limits);
    case Operation::ProbCBE: {
        const PairRequest r = parse_pair_request(body, true);
        double p = 0.0;
        check(cd_cbe_prob(r.p1, r.p2, r.rho, &p));
        return {{"prob", p}};
    }
    case Operation::CorrBounds: {
        const PairRequest r = parse_pair_request(body, false);
        double lo = 0.0, hi = 0.0;
        check(cd_cbe_corr_bounds(r.p1, r.p2, &lo, &hi));
        return {{"lower", lo}, {"upper", hi}};
    }
    case Operation::EffectsizeCBE: {
        const CBERequest r = parse_cbe_request(body);
        cd_cbe_effect e{};
        check(cd_cbe_effectsize(&r.design, &e));
        return cbe_effect(e);
    }
    case Operation::SamplesizeCBE: return samplesize_cbe(parse_cbe_request(body));
    case Operation::AreCBE: {
        const CBERequest r = parse_cbe_request(body);
        double are = 0.0;
        check(cd_cbe_are(&r.design, &are));
        return {{"are", are}};
    }
    case Operation::SimulateCBE: return simulate_cbe(parse_cbe_request(body), limits);
    }
    throw ApiError(CD_ERR_INTERNAL, "", "unknown operation");
}

}  // namespace compdesign::frontend
