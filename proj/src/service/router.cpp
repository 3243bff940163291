// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "service/router.hpp"

#include <array>
#include <string_view>

#include "frontend/api.hpp"

namespace compdesign::service {

namespace {

using frontend::ApiError;
using frontend::Operation;

struct Route {
    std::string_view path;
    Operation op;
};

constexpr std::array<Route, 11> kComputeRoutes{{
    {"/api/tte/effectsize", Operation::EffectsizeTTE},
    {"/api/tte/samplesize", Operation::SamplesizeTTE},
    {"/api/tte/are", Operation::AreTTE},
    {"/api/tte/curves", Operation::CurvesTTE},
    {"/api/tte/simulate", Operation::SimulateTTE},
    {"/api/cbe/prob", Operation::ProbCBE},
    {"/api/cbe/corr-bounds", Operation::CorrBounds},
    {"/api/cbe/effectsize", Operation::EffectsizeCBE},
    {"/api/cbe/samplesize", Operation::SamplesizeCBE},
    {"/api/cbe/are", Operation::AreCBE},
    {"/api/cbe/simulate", Operation::SimulateCBE},
}};

constexpr std::string_view kScenarioPrefix = "/api/scenarios";

Response error(int status, const std::string& code, const std::string& field, const std::string& message) {
    return {status, json{{"code", code}, {"field", field}, {"message", message}}.dump()};
}

Response ok(const json& doc, int status = 200) { return {status, doc.dump()}; }

int http_status(const ApiError& e) {
    if (e.is_infeasibility()) return 422;
    if (e.status() == CD_ERR_IO || e.status() == CD_ERR_INTERNAL) return 500;
    return 400;
}

json parse_body(const std::string& body) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) throw ApiError(CD_ERR_VALIDATION, "", "request body is not valid JSON");
    return doc;
}

// Runs `f`, turning failures into error responses.
template <class F>
Response guarded(F&& f) {
    try {
        return f();
    } catch (const frontend::LimitExceeded& e) {
        return error(422, "limit_exceeded", e.field(), e.what());
    } catch (const ApiError& e) {
        const bool malformed = e.status() == CD_ERR_VALIDATION && e.field().empty();
        return error(http_status(e), malformed ? "malformed_body" : e.code(), e.field(), e.what());
    } catch (const std::exception& e) {
        return error(500, "internal", "", e.what());
    }
}

// Full validation of a stored design: it must calibrate (tte) or produce an
// effect (cbe), exactly as a compute request would.
void validate_design(const std::string& kind, const json& design) {
    if (kind == "tte") {
        const frontend::TTERequest r = frontend::parse_tte_request(design);
        frontend::calibrate(r.design, r.quad);
    } else if (kind == "cbe") {
        const frontend::CBERequest r = frontend::parse_cbe_request(design);
        cd_cbe_effect effect{};
        frontend::check(cd_cbe_effectsize(&r.design, &effect));
    } else {
        throw ApiError(CD_ERR_VALIDATION, "kind", "kind must be 'tte' or 'cbe'");
    }
}

struct ScenarioPayload {
    std::string name;
    std::string kind;
    json design;
};

ScenarioPayload parse_scenario_payload(const std::string& body) {
    const json doc = parse_body(body);
    if (!doc.is_object()) throw ApiError(CD_ERR_VALIDATION, "", "request body must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "name" && key != "kind" && key != "design") {
            throw ApiError(CD_ERR_VALIDATION, key, "unknown field '" + key + "'");
        }
    }
    ScenarioPayload p;
    for (const char* key : {"name", "kind"}) {
        if (!doc.contains(key) || !doc[key].is_string()) {
            throw ApiError(CD_ERR_VALIDATION, key, std::string("'") + key + "' must be a string");
        }
    }
    p.name = doc["name"];
    p.kind = doc["kind"];
    if (p.name.empty()) throw ApiError(CD_ERR_VALIDATION, "name", "'name' must not be empty");
    if (!doc.contains("design") || !doc["design"].is_object()) {
        throw ApiError(CD_ERR_VALIDATION, "design", "'design' must be an object");
    }
    p.design = doc["design"];
    try {
        validate_design(p.kind, p.design);
    } catch (const ApiError& e) {
        if (e.field() == "kind") throw;
        throw ApiError(e.status(), "design." + e.field(), e.what());
    }
    return p;
}

}  // namespace

frontend::Limits service_limits() {
    frontend::Limits limits;
    limits.max_grid = 512;
    limits.max_sample_size = 100000;
    return limits;
}

Router::Router(ScenarioStore& store, frontend::Limits limits) : store_(store), limits_(limits) {}

Response Router::handle(const Request& request) const {
    if (request.path == "/api/health") {
        if (request.method != "GET") return error(405, "method_not_allowed", "", "use GET");
        return ok({{"status", "ok"}, {"version", cd_version()}});
    }
    for (const auto& route : kComputeRoutes) {
        if (request.path != route.path) continue;
        if (request.method != "POST") return error(405, "method_not_allowed", "", "use POST");
        return compute(route.op, request.body);
    }
    const std::string_view path = request.path;
    if (path == kScenarioPrefix) return scenarios(request, "");
    if (path.substr(0, kScenarioPrefix.size() + 1) == std::string(kScenarioPrefix) + "/") {
        const std::string id(path.substr(kScenarioPrefix.size() + 1));
        if (!id.empty() && id.find('/') == std::string::npos) return scenarios(request, id);
    }
    return error(404, "not_found", "", "no route for " + request.path);
}

Response Router::compute(frontend::Operation op, const std::string& body) const {
    return guarded([&] { return ok(frontend::compute(op, parse_body(body), limits_)); });
}

Response Router::scenarios(const Request& request, const std::string& id) const {
    auto not_found = [&] { return error(404, "not_found", "id", "scenario not found"); };
    return guarded([&]() -> Response {
        if (id.empty()) {
            if (request.method == "GET") return ok({{"scenarios", store_.list()}});
            if (request.method == "POST") {
                const ScenarioPayload p = parse_scenario_payload(request.body);
                return ok(store_.create(p.name, p.kind, p.design), 201);
            }
            return error(405, "method_not_allowed", "", "use GET or POST");
        }
        if (request.method == "GET") {
            const auto record = store_.get(id);
            return record ? ok(*record) : not_found();
        }
        if (request.method == "PUT") {
            if (!store_.get(id)) return not_found();
            const ScenarioPayload p = parse_scenario_payload(request.body);
            const auto record = store_.update(id, p.name, p.kind, p.design);
            return record ? ok(*record) : not_found();
        }
        if (request.method == "DELETE") return store_.remove(id) ? Response{204, ""} : not_found();
        return error(405, "method_not_allowed", "", "use GET, PUT or DELETE");
    });
}

}  // namespace compdesign::service
