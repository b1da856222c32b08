#pragma once

#include <string>

#include <cglab/evolution.hpp>
#include <cglab/params.hpp>

namespace cglab {

/// Full experiment description. Parsed from a flat key/value file with
/// dotted sections; parsing is strict (unknown or duplicate keys are fatal)
/// so a config file pins a run completely.
struct RunConfig {
    Params params;
    double r_max = 8.0;
    int m = 400;
    EvolutionMode mode;
    double horizon = 0.0; // t_end (physical) or s_end (rescaled)
    double safety = 0.4;
    InitialData initial;
    int snapshot_count = 60;
    bool log_spaced = true;
    double snapshot_t_min = 0.0; // 0 = auto (horizon * 1e-4, or 1 in s)
    std::string out_dir;
    bool dump_profiles = false;
    bool write_svg = false;
    double quad_tol = 1e-10;

    void validate() const;
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Snapshot times implied by a config: the start time plus `snapshot_count`
/// targets up to the horizon, geometrically spaced by default.
std::vector<double> snapshot_times(const RunConfig& config);

} // namespace cglab
