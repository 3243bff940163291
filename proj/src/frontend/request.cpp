// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "frontend/request.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <string>

#include "frontend/api.hpp"

namespace compdesign::frontend {

namespace {

constexpr std::string_view kDesignKeys[] = {"p0_e1", "p0_e2", "hr_e1", "hr_e2", "beta_e1", "beta_e2",
                                            "case", "copula", "rho", "rho_type", "followup_time"};
constexpr std::string_view kTTEExtraKeys[] = {"subdivisions", "lower_epsilon", "alpha", "power", "ss_formula",
                                              "grid", "rho_grid", "sample_size", "seed"};
constexpr std::string_view kCBEKeys[] = {"p0_e1", "p0_e2", "eff_e1", "eff_e2", "effm_e1", "effm_e2", "effm_ce",
                                         "rho", "alpha", "beta", "power", "unpooled", "sample_size", "seed"};

[[noreturn]] void invalid(const std::string& field, const std::string& message) {
    throw ApiError(CD_ERR_VALIDATION, field, message);
}

void require_object(const json& body) {
    if (!body.is_object()) invalid("", "request body must be a JSON object");
}

template <class... Lists>
void reject_unknown(const json& body, const Lists&... lists) {
    for (const auto& [key, value] : body.items()) {
        bool known = false;
        ((known = known || std::find(std::begin(lists), std::end(lists), key) != std::end(lists)), ...);
        if (!known) invalid(key, "unknown field '" + key + "'");
    }
}

double number(const json& body, const std::string& key, std::optional<double> fallback = std::nullopt) {
    const auto it = body.find(key);
    if (it == body.end()) {
        if (!fallback) invalid(key, "missing required field '" + key + "'");
        return *fallback;
    }
    if (!it->is_number()) invalid(key, "'" + key + "' must be a number");
    return it->get<double>();
}

std::uint64_t count(const json& body, const std::string& key, std::uint64_t fallback) {
    const auto it = body.find(key);
    if (it == body.end()) return fallback;
    if (it->is_number_unsigned()) return it->get<std::uint64_t>();
    if (it->is_number_integer() && it->get<std::int64_t>() >= 0) return it->get<std::uint64_t>();
    if (it->is_number_float()) {
        const double x = it->get<double>();
        if (x >= 0.0 && x == std::floor(x) && x < 1.8e19) return static_cast<std::uint64_t>(x);
    }
    invalid(key, "'" + key + "' must be a non-negative integer");
}

template <class Enum>
Enum enumeration(const json& body, const std::string& key, Enum fallback, cd_status (*parse)(const char*, Enum*)) {
    const auto it = body.find(key);
    if (it == body.end()) return fallback;
    if (!it->is_string()) invalid(key, "'" + key + "' must be a string");
    Enum out{};
    if (parse(it->get_ref<const std::string&>().c_str(), &out) != CD_OK) {
        invalid(key, "unknown value '" + it->get<std::string>() + "' for '" + key + "'");
    }
    return out;
}

bool boolean(const json& body, const std::string& key, bool fallback) {
    const auto it = body.find(key);
    if (it == body.end()) return fallback;
    if (!it->is_boolean()) invalid(key, "'" + key + "' must be true or false");
    return it->get<bool>();
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_number(const std::string& s) {
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

json scenario_value(const std::string& text, const std::string& key) {
    if (text == "true") return true;
    if (text == "false") return false;
    if (text.find(',') != std::string::npos) {
        json list = json::array();
        std::string_view rest = text;
        while (true) {
            const auto comma = rest.find(',');
            const auto item = parse_number(trim(rest.substr(0, comma)));
            if (!item) invalid(key, "'" + key + "' must be a comma-separated list of numbers");
            list.push_back(*item);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return list;
    }
    if (const auto x = parse_number(text)) {
        // Integral values stay integers so counts (case, grid, seed) parse.
        if (*x == std::floor(*x) && std::abs(*x) < 9e15 && text.find_first_of(".eE") == std::string::npos) {
            return static_cast<std::int64_t>(*x);
        }
        return *x;
    }
    return text;
}

}  // namespace

std::vector<double> default_rho_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 18; ++i) grid.push_back(0.05 * i);
    return grid;
}

TTERequest parse_tte_request(const json& body) {
    require_object(body);
    reject_unknown(body, kDesignKeys, kTTEExtraKeys);
    TTERequest r;
    cd_tte_design_init(&r.design);
    cd_quadrature_init(&r.quad);
    auto& d = r.design;
    d.p0_e1 = number(body, "p0_e1");
    d.p0_e2 = number(body, "p0_e2");
    d.hr_e1 = number(body, "hr_e1");
    d.hr_e2 = number(body, "hr_e2");
    d.beta_e1 = number(body, "beta_e1", d.beta_e1);
    d.beta_e2 = number(body, "beta_e2", d.beta_e2);
    const double case_id = number(body, "case", d.case_id);
    if (case_id != std::floor(case_id) || case_id < 1 || case_id > 4) invalid("case", "case must be 1, 2, 3 or 4");
    d.case_id = static_cast<int>(case_id);
    d.copula = enumeration(body, "copula", d.copula, cd_copula_parse);
    d.rho = number(body, "rho", d.rho);
    d.rho_type = enumeration(body, "rho_type", d.rho_type, cd_association_kind_parse);
    d.followup_time = number(body, "followup_time", d.followup_time);

    const std::uint64_t subdivisions = count(body, "subdivisions", static_cast<std::uint64_t>(r.quad.subdivisions));
    if (subdivisions > 10'000'000) invalid("subdivisions", "subdivisions is unreasonably large");
    r.quad.subdivisions = static_cast<int>(subdivisions);
    r.quad.lower_epsilon = number(body, "lower_epsilon", r.quad.lower_epsilon);
    r.alpha = number(body, "alpha", r.alpha);
    r.power = number(body, "power", r.power);
    r.formula = enumeration(body, "ss_formula", r.formula, cd_ss_formula_parse);
    r.grid = count(body, "grid", r.grid);
    if (const auto it = body.find("rho_grid"); it != body.end()) {
        if (!it->is_array()) invalid("rho_grid", "'rho_grid' must be an array of numbers");
        for (const auto& v : *it) {
            if (!v.is_number()) invalid("rho_grid", "'rho_grid' must be an array of numbers");
            r.rho_grid.push_back(v.get<double>());
        }
    } else {
        r.rho_grid = default_rho_grid();
    }
    if (body.contains("sample_size")) r.sample_size = count(body, "sample_size", 0);
    r.seed = count(body, "seed", r.seed);
    return r;
}

CBERequest parse_cbe_request(const json& body) {
    require_object(body);
    reject_unknown(body, kCBEKeys);
    CBERequest r;
    cd_cbe_design_init(&r.design);
    auto& d = r.design;
    d.p0_e1 = number(body, "p0_e1");
    d.p0_e2 = number(body, "p0_e2");
    d.eff_e1 = number(body, "eff_e1");
    d.eff_e2 = number(body, "eff_e2");
    d.effm_e1 = enumeration(body, "effm_e1", d.effm_e1, cd_effect_measure_parse);
    d.effm_e2 = enumeration(body, "effm_e2", d.effm_e2, cd_effect_measure_parse);
    d.effm_ce = enumeration(body, "effm_ce", d.effm_ce, cd_effect_measure_parse);
    d.rho = number(body, "rho", d.rho);
    d.alpha = number(body, "alpha", d.alpha);
    if (body.contains("beta") && body.contains("power")) invalid("power", "give either beta or power, not both");
    d.beta = body.contains("power") ? 1.0 - number(body, "power") : number(body, "beta", d.beta);
    d.unpooled = boolean(body, "unpooled", d.unpooled != 0) ? 1 : 0;
    if (body.contains("sample_size")) r.sample_size = count(body, "sample_size", 0);
    r.seed = count(body, "seed", r.seed);
    return r;
}

PairRequest parse_pair_request(const json& body, bool with_rho) {
    require_object(body);
    constexpr std::string_view with[] = {"p1", "p2", "rho"};
    constexpr std::string_view without[] = {"p1", "p2"};
    if (with_rho) {
        reject_unknown(body, with);
    } else {
        reject_unknown(body, without);
    }
    PairRequest r;
    r.p1 = number(body, "p1");
    r.p2 = number(body, "p2");
    if (with_rho) r.rho = number(body, "rho", 0.0);
    return r;
}

json parse_scenario(std::string_view text) {
    json out = json::object();
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            invalid("line " + std::to_string(line_no), "expected 'key = value' on line " + std::to_string(line_no));
        }
        std::string key = trim(std::string_view(content).substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        const std::string value = trim(std::string_view(content).substr(eq + 1));
        if (key.empty() || value.empty()) {
            invalid("line " + std::to_string(line_no), "expected 'key = value' on line " + std::to_string(line_no));
        }
        if (out.contains(key)) invalid(key, "'" + key + "' is given twice");
        out[key] = scenario_value(value, key);
    }
    return out;
}

}  // namespace compdesign::frontend
