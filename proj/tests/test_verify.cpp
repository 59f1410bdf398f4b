#include <doctest.h>

#include "hookforge/errors.hpp"
#include "hookforge/verify.hpp"

using namespace hookforge;

TEST_CASE("every registered sweep passes at reduced bounds") {
    SweepConfig cfg;
    cfg.max_n = 6;
    cfg.trials = 10;
    for (const std::string& id : theorem_ids()) {
        const SweepResult r = run_theorem(id, cfg);
        CHECK(r.theorem == id);
        CHECK(r.instances > 0);
        CHECK_MESSAGE(r.ok(), id, ": ",
                      r.counterexamples.empty() ? "" : r.counterexamples.front().detail);
    }
    CHECK_THROWS_AS(run_theorem("no-such-theorem", cfg), ParseError);
}

TEST_CASE("a one-cell bound leaves only the square") {
    SweepConfig cfg;
    cfg.max_n = 1;
    const SweepResult r = run_theorem("young-hook", cfg);
    CHECK(r.ok());
    CHECK(r.instances == 2); // the empty diagram and the single square
}

TEST_CASE("sweeps are deterministic and job-count independent") {
    SweepConfig serial;
    serial.max_n = 7;
    serial.trials = 8;
    serial.seed = 99;
    SweepConfig parallel = serial;
    parallel.jobs = 3;
    for (const std::string& id : {std::string("young-weighted"), std::string("poset-bound"),
                                  std::string("product-hooks")}) {
        const SweepResult a = run_theorem(id, serial);
        const SweepResult b = run_theorem(id, parallel);
        CHECK(a.instances == b.instances);
        CHECK(a.ok());
        CHECK(b.ok());
    }
}

TEST_CASE("golden values") {
    const SweepResult r = run_theorem("golden", SweepConfig{});
    CHECK(r.ok());
}
