#ifndef HOOKFORGE_VERIFY_HPP
#define HOOKFORGE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hookforge {

/// Knobs for a verification sweep. Unset fields fall back to the
/// per-theorem defaults, which match the shipped verification suite.
struct SweepConfig {
    std::optional<int> max_n;
    std::optional<int> trials;
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct Counterexample {
    std::string instance; // enough to reproduce: text form of the object
    std::string detail;
};

struct SweepResult {
    std::string theorem;
    long long instances = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    bool ok() const { return counterexamples.empty(); }
};

/// Registered sweep identifiers, in the order `all` runs them.
const std::vector<std::string>& theorem_ids();

/// Run one sweep (or `all`). Throws ParseError for unknown identifiers.
SweepResult run_theorem(const std::string& id, const SweepConfig& config);
std::vector<SweepResult> run_all(const SweepConfig& config);

} // namespace hookforge

#endif
