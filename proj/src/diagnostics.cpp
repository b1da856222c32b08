#include <cglab/diagnostics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cglab {

namespace {
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
}

TrajectoryRecord record(const RunState& state, const ProfileConstants& constants) {
    TrajectoryRecord rec;
    rec.time = state.time;
    const FieldNorms n = norms(state.field, state.params.q);
    rec.l1 = n.l1;
    rec.linf = n.linf;
    rec.grad_linf = n.grad_linf;
    rec.grad_lq_q = n.grad_lq_q;
    rec.support_radius = support_radius(state.field);

    const bool rescaled = state.mode.kind != Mode::physical;
    if (rescaled && constants.critical && n.l1 > 0.0) {
        rec.theta = n.l1;
        rec.amplitude = mass_to_amplitude(n.l1, state.params, constants);
        double err_a = 0.0;
        double err_star = 0.0;
        const RadialGrid& grid = *state.field.grid;
        for (int i = 0; i < grid.m; ++i) {
            const double r = grid.center[i];
            const double w = state.field.values[i];
            err_a = std::max(err_a,
                             std::fabs(w - barenblatt_value(rec.amplitude, r, state.params)));
            err_star = std::max(err_star,
                                std::fabs(w - barenblatt_value(constants.a_star, r, state.params)));
        }
        rec.profile_error_sup = err_a;
        rec.profile_error_star = err_star;
    } else {
        rec.theta = rescaled ? n.l1 : nan_value;
        rec.amplitude = nan_value;
        rec.profile_error_sup = nan_value;
        rec.profile_error_star = nan_value;
    }
    return rec;
}

double mass_production(const TrajectoryRecord& rec, const Params& params) {
    return (params.dim + 1) * rec.l1 - rec.grad_lq_q;
}

namespace {

double series_value(const TrajectoryRecord& rec, DecaySeries kind) {
    switch (kind) {
    case DecaySeries::sup_norm:
        return rec.linf;
    case DecaySeries::support:
        return rec.support_radius;
    case DecaySeries::mass:
        return rec.l1;
    }
    return nan_value;
}

const char* series_name(DecaySeries kind) {
    switch (kind) {
    case DecaySeries::sup_norm:
        return "sup_norm";
    case DecaySeries::support:
        return "support";
    case DecaySeries::mass:
        return "mass";
    }
    return "unknown";
}

} // namespace

RateFit compensated_series(const std::vector<TrajectoryRecord>& trajectory,
                           DecaySeries kind, double alpha_power, double beta_log) {
    RateFit fit;
    fit.series = series_name(kind);
    fit.alpha_power = alpha_power;
    fit.beta_log = beta_log;
    for (const TrajectoryRecord& rec : trajectory) {
        if (!(rec.time >= 10.0))
            continue;
        const double value = series_value(rec, kind);
        if (!(value > 0.0) || !std::isfinite(value))
            continue;
        fit.times.push_back(rec.time);
        fit.compensated.push_back(value * std::pow(rec.time, -alpha_power) *
                                  std::pow(std::log(rec.time), -beta_log));
    }
    if (fit.times.size() < 2)
        throw std::invalid_argument("compensated series needs at least two records "
                                    "with time >= 10 and positive values");

    fit.window_hi = fit.times.back();
    fit.window_lo = fit.window_hi / 10.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (size_t k = 0; k < fit.times.size(); ++k) {
        if (fit.times[k] < fit.window_lo)
            continue;
        lo = std::min(lo, fit.compensated[k]);
        hi = std::max(hi, fit.compensated[k]);
    }
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("compensated series has no usable last-decade window");
    fit.plateau_min = lo;
    fit.plateau_max = hi;
    fit.plateau_ratio = hi / lo;
    return fit;
}

RateFit compensated_decay(const std::vector<TrajectoryRecord>& trajectory,
                          DecaySeries kind, const Params& params) {
    const double p = params.p;
    const int n = params.dim;
    const double eta = 1.0 / (p * (n + 1) - 2.0 * n);
    double alpha = 0.0, beta = 0.0;
    switch (kind) {
    case DecaySeries::sup_norm:
        alpha = -n * eta;
        beta = -p * eta * (n + 1);
        break;
    case DecaySeries::support:
        alpha = eta;
        beta = -eta * (p - 2.0) * (n + 1);
        break;
    case DecaySeries::mass:
        alpha = 0.0;
        beta = -static_cast<double>(n + 1);
        break;
    }
    return compensated_series(trajectory, kind, alpha, beta);
}

PoincareCheck poincare_check(const RadialField& field, double mu) {
    if (!(mu >= 1.0))
        throw std::invalid_argument("poincare exponent must be >= 1");
    const double radius = support_radius(field);
    if (!(radius > 0.0))
        throw std::invalid_argument("poincare check needs a field with non-empty support");
    const int dim = field.grid->dim;
    double l1 = 0.0;
    for (int i = 0; i < field.grid->m; ++i)
        l1 += field.grid->cell_vol[i] * field.values[i];

    PoincareCheck out;
    out.lhs = std::pow(l1, mu);
    out.rhs_without_k = std::pow(radius, mu * (dim + 1) - dim) *
                        face_weighted_gradient_sum(field, mu);
    out.ratio = out.lhs / out.rhs_without_k;
    return out;
}

ConvergenceReport convergence_report(const std::vector<TrajectoryRecord>& trajectory,
                                     const Params& params,
                                     const ProfileConstants& constants) {
    if (!constants.critical)
        throw std::invalid_argument("convergence report requires critical-mode constants");
    std::vector<const TrajectoryRecord*> recs;
    for (const TrajectoryRecord& rec : trajectory)
        if (std::isfinite(rec.amplitude))
            recs.push_back(&rec);
    if (recs.empty())
        throw std::invalid_argument("convergence report needs a non-empty rescaled trajectory");

    ConvergenceReport rep;
    rep.a_star = constants.a_star;
    rep.amplitude_end = recs.back()->amplitude;
    rep.amplitude_rel_error =
        std::fabs(rep.amplitude_end - constants.a_star) / constants.a_star;

    const TrajectoryRecord* at10 = nullptr;
    for (const TrajectoryRecord* rec : recs)
        if (rec->time >= 10.0) {
            at10 = rec;
            break;
        }
    rep.error_at_s10 = at10 ? at10->profile_error_sup : nan_value;
    rep.error_at_end = recs.back()->profile_error_sup;
    rep.error_decay_factor =
        (at10 && rep.error_at_end > 0.0) ? rep.error_at_s10 / rep.error_at_end : nan_value;

    int non_increasing = 0;
    for (size_t k = 1; k < recs.size(); ++k)
        if (recs[k]->profile_error_sup <= recs[k - 1]->profile_error_sup)
            ++non_increasing;
    rep.monotone_fraction =
        recs.size() > 1 ? static_cast<double>(non_increasing) / (recs.size() - 1) : 1.0;

    const double fractions[3] = {0.2, 0.1, 0.05};
    double* firsts[3] = {&rep.first_s_below_20, &rep.first_s_below_10,
                         &rep.first_s_below_05};
    for (int j = 0; j < 3; ++j) {
        *firsts[j] = nan_value;
        for (const TrajectoryRecord* rec : recs)
            if (rec->profile_error_sup <= fractions[j] * rec->linf) {
                *firsts[j] = rec->time;
                break;
            }
    }

    int agree = 0;
    for (const TrajectoryRecord* rec : recs) {
        const double g = mass_production(*rec, params);
        if (g * (constants.a_star - rec->amplitude) > 0.0)
            ++agree;
    }
    rep.g_sign_agreement = static_cast<double>(agree) / recs.size();
    return rep;
}

} // namespace cglab
