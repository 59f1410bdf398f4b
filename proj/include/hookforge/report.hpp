#ifndef HOOKFORGE_REPORT_HPP
#define HOOKFORGE_REPORT_HPP

#include <string>

#include "hookforge/io.hpp"
#include "hookforge/verify.hpp"

namespace hookforge {

/// Machine-readable reports behind the command surface. Every value that
/// can outgrow a double is a decimal string; reports parse back to the
/// same JSON they were dumped from.

// kind: a cell statistic, "branch"/"distance", "R"/"Q"/"V",
// "upper-ideal", "weighted" (diagrams) or "H" (ideals). Paired kinds
// report both multisets and their majorization verdict.
Json stats_report(const AnyObject& object, const std::string& kind,
                  const std::string& weight_spec);

Json count_report(const AnyObject& object, int le_limit);

Json shuffle_report(const AnyObject& object, const std::string& subset_text,
                    const std::string& weight_spec);

Json bounds_report(const AnyObject& object, int le_limit);

Json verify_report(const SweepResult& result, const SweepConfig& config);

// true when the report documents a theorem violation (drives exit code 1)
bool report_flags_counterexample(const Json& report);

} // namespace hookforge

#endif
