#pragma once

#include <string>
#include <vector>

#include <cglab/evolution.hpp>
#include <cglab/profiles.hpp>

namespace cglab {

/// Per-snapshot diagnostics. Fields without a meaning for the current mode
/// (amplitude and profile errors in physical runs, or with non-critical q)
/// are NaN.
struct TrajectoryRecord {
    double time = 0.0;
    double l1 = 0.0;
    double linf = 0.0;
    double grad_linf = 0.0;
    double grad_lq_q = 0.0;
    double support_radius = 0.0;
    double theta = 0.0;             // rescaled mass functional (= l1)
    double amplitude = 0.0;         // A with mass(B_A) = theta
    double profile_error_sup = 0.0; // ||w - B_{A(s)}||_inf at cell centers
    double profile_error_star = 0.0; // ||w - B_{a_star}||_inf
};

TrajectoryRecord record(const RunState& state, const ProfileConstants& constants);

/// Mass production functional G = (N+1) ||w||_1 - ||grad w||_q^q
/// evaluated from a record's stored norms.
double mass_production(const TrajectoryRecord& rec, const Params& params);

enum class DecaySeries { sup_norm, support, mass };

/// A measured series divided by its predicted power-log law
/// value ~ t^{alpha} (log t)^{beta}; a plateau of the compensated values
/// certifies the law. Plateau statistics are taken over the last time
/// decade [t_end/10, t_end].
struct RateFit {
    std::string series;
    double alpha_power = 0.0;
    double beta_log = 0.0;
    std::vector<double> times;
    std::vector<double> compensated;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double plateau_min = 0.0;
    double plateau_max = 0.0;
    double plateau_ratio = 0.0; // >= 1
};

/// Compensates with explicit exponents (used for alternative-law probes).
/// Only records with time >= 10 and a positive value enter the fit.
RateFit compensated_series(const std::vector<TrajectoryRecord>& trajectory,
                           DecaySeries kind, double alpha_power, double beta_log);

/// Compensates with the theoretical exponents for (p, N):
///   sup_norm  t^{-N eta} (log t)^{-p eta (N+1)}
///   support   t^{eta}    (log t)^{-eta (p-2)(N+1)}
///   mass      (log t)^{-(N+1)}
RateFit compensated_decay(const std::vector<TrajectoryRecord>& trajectory,
                          DecaySeries kind, const Params& params);

struct PoincareCheck {
    double lhs = 0.0;           // ||w||_1^mu
    double rhs_without_k = 0.0; // R^{mu(N+1)-N} ||grad w||_mu^mu
    double ratio = 0.0;         // empirical constant
};

/// Empirical constant of ||w||_1^mu <= K R^{mu(N+1)-N} ||grad w||_mu^mu
/// for a compactly supported field; throws for fields with empty support.
PoincareCheck poincare_check(const RadialField& field, double mu);

struct ConvergenceReport {
    double amplitude_end = 0.0;
    double a_star = 0.0;
    double amplitude_rel_error = 0.0;   // |A(s_end) - a_star| / a_star
    double error_at_s10 = 0.0;          // profile_error_sup at first s >= 10
    double error_at_end = 0.0;
    double error_decay_factor = 0.0;    // error_at_s10 / error_at_end
    double monotone_fraction = 0.0;     // consecutive non-increase fraction
    double first_s_below_20 = 0.0;      // NaN when never reached
    double first_s_below_10 = 0.0;
    double first_s_below_05 = 0.0;
    double g_sign_agreement = 0.0;      // fraction with sign G = sign(a*-A)
};

/// Summary of a rescaled-mode trajectory's approach to the selected profile.
ConvergenceReport convergence_report(const std::vector<TrajectoryRecord>& trajectory,
                                     const Params& params,
                                     const ProfileConstants& constants);

} // namespace cglab
