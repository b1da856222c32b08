#pragma once

#include <string>
#include <vector>

#include <cglab/config.hpp>

namespace cglab {

/// Cartesian product of parameter lists applied to a template config.
/// Each combination runs independently (q stays critical for the chosen
/// p, N); results aggregate into one CSV keyed by (p, N, family).
struct SweepSpec {
    RunConfig base;
    std::vector<double> p_list;
    std::vector<int> dim_list;
    std::vector<std::string> family_list; // empty = keep the template family
    std::string out_dir;
    int threads = 1; // CGLAB_THREADS overrides when set
};

/// Returns the aggregate CSV content (also written to out_dir/sweep.csv).
/// Validates the product size (<= 256) and output-directory conflicts
/// before any run starts.
std::string run_sweep(const SweepSpec& spec);

int sweep_thread_count(int requested);

} // namespace cglab
