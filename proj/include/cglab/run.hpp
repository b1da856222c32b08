#pragma once

#include <vector>

#include <cglab/config.hpp>
#include <cglab/diagnostics.hpp>

namespace cglab {

struct RunResult {
    std::vector<TrajectoryRecord> records;
    RunState state; // state at the horizon
    ProfileConstants constants;
    long long total_steps = 0;
    double wall_seconds = 0.0;
    /// field dumps at snapshot times, kept only when requested
    std::vector<RadialField> snapshots;
};

/// Integrates a config to its horizon, recording diagnostics at the
/// snapshot times. Deterministic given the config; does no file IO.
RunResult run(const RunConfig& config, bool keep_snapshots = false);

} // namespace cglab
