#pragma once

#include <string>
#include <vector>

#include "coind/json.hpp"

namespace coind {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    Json data = Json::object();
    Json witnesses = Json::object();

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    void merge(const Report& o, const std::string& prefix = {}) {
        for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
    }
    Json checks_json() const {
        Json out = Json::array();
        for (const auto& c : checks) {
            Json j = {{"name", c.name}, {"pass", c.ok}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            out.push_back(j);
        }
        return out;
    }
};

}  // namespace coind
