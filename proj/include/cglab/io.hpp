#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <cglab/config.hpp>
#include <cglab/run.hpp>

namespace cglab {

/// Fixed-format double for reproducible text outputs ("%.12g", "nan").
std::string format_double(double x);

/// Frozen column order: time,l1,linf,grad_linf,grad_lq_q,support_radius,
/// theta,amplitude,profile_error_sup,profile_error_star
std::string trajectory_csv(const std::vector<TrajectoryRecord>& records);

nlohmann::json config_json(const RunConfig& config);
nlohmann::json constants_json(const Params& params, const ProfileConstants& constants);
nlohmann::json record_json(const TrajectoryRecord& rec);
nlohmann::json rate_fit_json(const RateFit& fit);
nlohmann::json convergence_json(const ConvergenceReport& report);

/// config echo + final record + convergence report / rate fits; wall time
/// and step counts live under "meta" (the one non-reproducible key).
nlohmann::json summary_json(const RunConfig& config, const RunResult& result);

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal static polyline chart with optional log axes.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series,
                           bool log_x, bool log_y);

void write_text_file(const std::string& path, const std::string& content);

/// trajectory.csv + summary.json (+ optional profiles_sNNNN.csv dumps and
/// SVG charts) under config.out_dir.
void write_run_outputs(const RunConfig& config, const RunResult& result);

} // namespace cglab
