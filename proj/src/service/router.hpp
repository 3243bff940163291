// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "frontend/compute.hpp"
#include "service/store.hpp"

namespace compdesign::service {

struct Request {
    std::string method;  // GET, POST, PUT, DELETE
    std::string path;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;  // JSON, or empty for 204
};

// Grid and sample caps applied to compute requests.
frontend::Limits service_limits();

// Maps requests to calculations and scenario CRUD. Stateless apart from the
// store; safe to call from concurrent threads.
//
// Errors are {"code", "field", "message"}: 400 for malformed or invalid
// input, 422 for infeasible designs and exceeded caps, 404 for unknown
// routes and scenarios, 405 for a known route with the wrong method.
class Router {
public:
    Router(ScenarioStore& store, frontend::Limits limits = service_limits());

    Response handle(const Request& request) const;

private:
    Response compute(frontend::Operation op, const std::string& body) const;
    Response scenarios(const Request& request, const std::string& id) const;

    ScenarioStore& store_;
    frontend::Limits limits_;
};

}  // namespace compdesign::service
