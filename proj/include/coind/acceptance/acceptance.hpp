#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coind/report.hpp"

namespace coind::acceptance {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0: no bound
    std::function<Report(std::uint64_t)> run;
};

// criteria 1..10; determinism (11) is determinism_check
const std::vector<Criterion>& criteria();

// {"criteria": [{id, name, pass, checks, data}]} for criteria 1..10
Json run_all(std::uint64_t seed, Report& aggregate);
// reruns criteria 1..10 and compares the serialized documents byte for byte
Report determinism_check(std::uint64_t seed, const Json& first);

Json criterion_json(const Criterion& c, const Report& r);

}  // namespace coind::acceptance
