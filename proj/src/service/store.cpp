// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "service/store.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace compdesign::service {

namespace {

std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string new_id() {
    static thread_local std::mt19937_64 gen{std::random_device{}()};
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(gen()));
    return buf;
}

}  // namespace

ScenarioStore::ScenarioStore(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream file(path_, std::ios::binary);
    if (!file) return;
    const json doc = json::parse(file);
    if (!doc.is_object() || !doc.contains("scenarios") || !doc["scenarios"].is_array()) {
        throw std::runtime_error("scenario store '" + path_.string() + "' is not a scenario document");
    }
    records_ = doc["scenarios"];
}

json ScenarioStore::list() const {
    std::lock_guard lock(mutex_);
    return records_;
}

std::optional<json> ScenarioStore::get(const std::string& id) const {
    std::lock_guard lock(mutex_);
    for (const auto& r : records_) {
        if (r["id"] == id) return r;
    }
    return std::nullopt;
}

json ScenarioStore::create(const std::string& name, const std::string& kind, const json& design) {
    std::lock_guard lock(mutex_);
    std::string id = new_id();
    for (bool clash = true; clash;) {
        clash = false;
        for (const auto& r : records_) {
            if (r["id"] == id) clash = true;
        }
        if (clash) id = new_id();
    }
    const std::string stamp = now_utc();
    json record = {{"id", id}, {"name", name}, {"kind", kind}, {"design", design}, {"created", stamp},
                   {"modified", stamp}};
    records_.push_back(record);
    try {
        persist();
    } catch (...) {
        records_.erase(records_.end() - 1);
        throw;
    }
    return record;
}

std::optional<json> ScenarioStore::update(const std::string& id, const std::string& name, const std::string& kind,
                                          const json& design) {
    std::lock_guard lock(mutex_);
    for (auto& r : records_) {
        if (r["id"] != id) continue;
        const json previous = r;
        r["name"] = name;
        r["kind"] = kind;
        r["design"] = design;
        r["modified"] = now_utc();
        try {
            persist();
        } catch (...) {
            r = previous;
            throw;
        }
        return r;
    }
    return std::nullopt;
}

bool ScenarioStore::remove(const std::string& id) {
    std::lock_guard lock(mutex_);
    for (auto it = records_.begin(); it != records_.end(); ++it) {
        if ((*it)["id"] != id) continue;
        const json previous = *it;
        const auto index = it - records_.begin();
        records_.erase(it);
        try {
            persist();
        } catch (...) {
            records_.insert(records_.begin() + index, previous);
            throw;
        }
        return true;
    }
    return false;
}

void ScenarioStore::persist() const {
    std::filesystem::path tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        file << json{{"scenarios", records_}}.dump(2) << '\n';
        file.flush();
        if (!file) throw std::runtime_error("cannot write scenario store '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path_);
}

}  // namespace compdesign::service
