// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

// HTTP front for the service router.
//
// Environment:
//   COMPOSITE_DESIGN_HOST         bind address (default 127.0.0.1)
//   COMPOSITE_DESIGN_PORT         port (default 8080)
//   COMPOSITE_DESIGN_STORE        scenario file (default ./scenarios.json)
//   COMPOSITE_DESIGN_CORS_ORIGIN  allowed browser origin (default *)

#include <httplib.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "service/router.hpp"

namespace {

std::string env_or(const char* name, const char* fallback) {
    const char* value = std::getenv(name);
    return value != nullptr && *value != '\0' ? value : fallback;
}

}  // namespace

int main() {
    const std::string host = env_or("COMPOSITE_DESIGN_HOST", "127.0.0.1");
    const std::string port_text = env_or("COMPOSITE_DESIGN_PORT", "8080");
    const std::string store_path = env_or("COMPOSITE_DESIGN_STORE", "scenarios.json");
    const std::string origin = env_or("COMPOSITE_DESIGN_CORS_ORIGIN", "*");

    int port = 0;
    try {
        port = std::stoi(port_text);
    } catch (const std::exception&) {
        port = -1;
    }
    if (port <= 0 || port > 65535) {
        std::cerr << "COMPOSITE_DESIGN_PORT must be a port number, got '" << port_text << "'\n";
        return 2;
    }

    try {
        compdesign::service::ScenarioStore store(store_path);
        const compdesign::service::Router router(store);

        httplib::Server server;
        server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                                    {"Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS"},
                                    {"Access-Control-Allow-Headers", "Content-Type"}});
        auto dispatch = [&](const httplib::Request& req, httplib::Response& res) {
            const auto out = router.handle({req.method, req.path, req.body});
            res.status = out.status;
            if (!out.body.empty()) res.set_content(out.body, "application/json");
        };
        const char* any = R"(/.*)";
        server.Get(any, dispatch);
        server.Post(any, dispatch);
        server.Put(any, dispatch);
        server.Delete(any, dispatch);
        server.Options(any, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

        std::cerr << "listening on " << host << ':' << port << ", scenarios in " << store_path << '\n';
        if (!server.listen(host, port)) {
            std::cerr << "cannot bind " << host << ':' << port << '\n';
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
