// Acceptance suite: every shipped guarantee at its full size bound,
// one pass/fail line per criterion. Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hookforge/verify.hpp"

namespace {

using hookforge::SweepConfig;
using hookforge::SweepResult;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<std::vector<SweepResult>()> run;
};

int jobs_from_env() {
    if (const char* env = std::getenv("HOOKFORGE_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 2;
}

} // namespace

int main() {
    SweepConfig defaults; // per-theorem defaults are the acceptance bounds
    defaults.jobs = jobs_from_env();

    auto one = [&](const char* id) {
        return [&, id] { return std::vector<SweepResult>{hookforge::run_theorem(id, defaults)}; };
    };
    auto two = [&](const char* a, const char* b) {
        return [&, a, b] {
            return std::vector<SweepResult>{hookforge::run_theorem(a, defaults),
                                            hookforge::run_theorem(b, defaults)};
        };
    };

    const std::vector<Criterion> criteria{
        {"golden-values", 1.0, one("golden")},
        {"hook-sum-identity-n18", 60.0, one("young-sum")},
        {"hook-majorization-n14", 60.0, one("young-hook")},
        {"area-and-variance-n14", 60.0, one("young-area")},
        {"weighted-majorization-n12", 120.0, one("young-weighted")},
        {"plane-shuffle-exhaustive-n10", 600.0, one("young-shuffle")},
        {"tree-majorization-n9", 60.0, one("tree-branch")},
        {"linear-extension-bound", 120.0, one("poset-bound")},
        {"solid-majorization-and-bounds", 120.0, two("solid-stats", "solid-bounds")},
        {"product-ideal-majorization", 120.0, one("product-hooks")},
        {"oracle-equivalences", 120.0, one("oracle-equiv")},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<SweepResult> results;
        std::string error;
        try {
            results = criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool ok = error.empty();
        long long instances = 0;
        std::string detail;
        for (const SweepResult& r : results) {
            instances += r.instances;
            if (!r.ok()) {
                ok = false;
                detail = r.theorem + ": " + r.counterexamples.front().instance + " -- " +
                         r.counterexamples.front().detail;
            }
        }
        if (ok && elapsed > criterion.budget_seconds) {
            ok = false;
            detail = "time budget exceeded";
        }
        if (!error.empty())
            detail = error;

        std::printf("%-4s %-32s instances=%-6lld %6.2fs%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.name.c_str(), instances, elapsed, detail.empty() ? "" : "  ",
                    detail.c_str());
        failures += !ok;
    }
    if (failures)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
