// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

namespace compdesign::service {

using nlohmann::json;

// Named scenarios kept in one JSON file. Every mutation rewrites the file
// through a temporary and a rename, so a crash leaves the old or the new
// document, never a torn one. Records are
//   {id, name, kind: "tte" | "cbe", design: {...}, created, modified}.
// Callers validate designs before handing them in.
class ScenarioStore {
public:
    // Loads `path` when it exists; a missing file is an empty store.
    explicit ScenarioStore(std::filesystem::path path);

    json list() const;
    std::optional<json> get(const std::string& id) const;
    json create(const std::string& name, const std::string& kind, const json& design);
    std::optional<json> update(const std::string& id, const std::string& name, const std::string& kind,
                               const json& design);
    bool remove(const std::string& id);

private:
    void persist() const;  // caller holds mutex_

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    json records_ = json::array();
};

}  // namespace compdesign::service
