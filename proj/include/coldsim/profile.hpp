#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coldsim/rng.hpp"
#include "coldsim/time.hpp"

namespace coldsim {

enum class StrategyId { prebaking, seuss };

std::string_view to_string(StrategyId id);
StrategyId parse_strategy_id(std::string_view name);

enum class Scenario { cold, hot };

std::string_view to_string(Scenario s);

/// Per-stage costs of bringing one instance up. The stages mirror the usual
/// instance-creation pipeline: isolated environment, process + runtime,
/// function code and dependencies; `restore` is the cost of recovering a
/// snapshot instead of redoing the stages it captured.
struct StageCosts {
    SimTime isolation_boot;
    SimTime runtime_init;
    SimTime code_load_compile;
    SimTime restore;
};

/// Service-time model for one (function, strategy) pair. Medians are split
/// by scenario: `cold` is the first request an instance serves, `hot` every
/// later one. `dispersion` is the multiplicative log-scale sigma applied to
/// every sampled duration; 0 makes the model fully deterministic.
struct ServiceModel {
    SimTime cold_median;
    SimTime hot_median;
    double dispersion = 0.0;
};

/// Cost description of one function. No code runs anywhere; everything the
/// simulator needs to know about a function is captured here.
struct FunctionProfile {
    std::string name;
    std::string runtime_id;
    std::uint64_t dependency_bytes = 0;
    std::uint64_t pages = 1;  // resident pages once fully initialized
    std::map<StrategyId, StageCosts> stage_costs;
    std::map<StrategyId, ServiceModel> service;
    std::map<StrategyId, double> failure_prob;
};

/// One violated invariant; `path` names the offending field.
struct Violation {
    std::string path;
    std::string message;
};

/// Checks every profile invariant against the strategies an experiment will
/// use. Violations are returned as data, never thrown.
std::vector<Violation> validate_profile(const FunctionProfile& profile,
                                        const std::set<StrategyId>& strategies);

/// Built-in calibrated profiles: "noop", "markdown", "big".
FunctionProfile builtin_profile(std::string_view name);

const std::vector<std::string>& builtin_profile_names();

/// Draws one service time for the given strategy and scenario. The draw is
/// log-symmetric around the configured median; dispersion == 0 returns the
/// median exactly.
SimTime sample_service_time(const FunctionProfile& profile, StrategyId strategy,
                            Scenario scenario, SampleRng& rng);

}  // namespace coldsim
