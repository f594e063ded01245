#include <chrono>
#include <cstdio>
#include <exception>

#include "coind/acceptance/acceptance.hpp"

using namespace coind;

int main() {
    const std::uint64_t seed = 20240601;
    int failed = 0;
    Json doc = Json::array();
    for (const auto& c : acceptance::criteria()) {
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        try {
            r = c.run(seed);
        } catch (const std::exception& e) {
            r.add("completed without error", false, e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.budget_seconds <= 0 || secs < c.budget_seconds;
        bool ok = r.ok() && in_time;
        failed += ok ? 0 : 1;
        doc.push_back(acceptance::criterion_json(c, r));
        std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.budget_seconds);
        for (const auto& ch : r.checks)
            if (!ch.ok) std::printf("    failed check: %s %s\n", ch.name.c_str(), ch.detail.c_str());
    }
    auto det = acceptance::determinism_check(seed, doc);
    bool ok = det.ok();
    failed += ok ? 0 : 1;
    std::printf("%s criterion 11: selftest output is deterministic\n", ok ? "PASS" : "FAIL");
    return failed == 0 ? 0 : 1;
}
