#include <cglab/evolution.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <cglab/profiles.hpp>

namespace cglab {

namespace {

double pos_pow(double x, double e) {
    if (e == 1.0)
        return x;
    if (e == 2.0)
        return x * x;
    if (e == 0.5)
        return std::sqrt(x);
    if (e == 1.5)
        return x * std::sqrt(x);
    if (e == 2.5)
        return x * x * std::sqrt(x);
    if (e == 3.0)
        return x * x * x;
    return std::pow(x, e);
}

constexpr double dt_guard = 1e-30;

struct StepScratch {
    std::vector<double> grad; // m+1 face gradients
};

thread_local StepScratch scratch;

// Gradients over faces [0, hi+2]; everything beyond is zero.
// Returns the max |g| over the touched range.
double fill_gradients(const RadialField& field, int hi, std::vector<double>& g) {
    const int m = field.grid->m;
    const double inv_dr = 1.0 / field.grid->dr;
    const auto& v = field.values;
    if (static_cast<int>(g.size()) != m + 1)
        g.assign(m + 1, 0.0);
    const int top_face = std::min(hi + 2, m);
    g[0] = 0.0;
    double gmax = 0.0;
    for (int j = 1; j <= top_face; ++j) {
        const double outer = (j < m) ? v[j] : 0.0;
        g[j] = (outer - v[j - 1]) * inv_dr;
        gmax = std::max(gmax, std::fabs(g[j]));
    }
    return gmax;
}

double dt_bound(const RunState& state, double gmax) {
    const Params& pr = state.params;
    const RadialGrid& grid = *state.field.grid;
    const double dr = grid.dr;

    double bound = dr * dr /
        (2.0 * pr.dim * (pr.p - 1.0) * pos_pow(gmax, pr.p - 2.0) + dt_guard);

    if (state.mode.kind != Mode::physical) {
        const double eta = 1.0 / (pr.p * (pr.dim + 1) - 2.0 * pr.dim);
        double speed = eta * grid.r_max;
        if (state.mode.kind == Mode::rescaled_full)
            speed *= 1.0 + (pr.p - 2.0) * (pr.dim + 1) / state.time;
        bound = std::min(bound, dr / (speed + dt_guard));
    }
    if (state.mode.lambda > 0.0 && state.mode.kind != Mode::rescaled_autonomous) {
        const double rate = pr.q * pos_pow(gmax, pr.q - 1.0) / dr;
        bound = std::min(bound, 1.0 / (rate + dt_guard));
    }
    return bound;
}

// Forward-Euler update from precomputed face gradients, then clamp,
// support flush and the near-boundary check.
void apply_update(RunState& state, double dt, const std::vector<double>& g, int hi) {
    const Params& pr = state.params;
    const RadialGrid& grid = *state.field.grid;
    auto& v = state.field.values;
    const int m = grid.m;
    const double p = pr.p;
    const double q = pr.q;
    const double eta = 1.0 / (p * (pr.dim + 1) - 2.0 * pr.dim);

    const bool rescaled = state.mode.kind != Mode::physical;
    const bool full = state.mode.kind == Mode::rescaled_full;
    const double inv_s = full ? 1.0 / state.time : 0.0;
    const double growth = full ? p * eta * (pr.dim + 1) * inv_s : 0.0;
    const double outward = full ? (p - 2.0) * eta * (pr.dim + 1) * inv_s : 0.0;
    const double absorb =
        (state.mode.kind == Mode::physical) ? state.mode.lambda
                                            : state.mode.lambda * inv_s;

    const int top = std::min(hi + 1, m - 1);

    // fluxes at faces 0..top+1; face j sits between cells j-1 and j
    auto pflux = [&](int j) {
        if (j == 0)
            return 0.0;
        return grid.face_area[j] * pos_pow(std::fabs(g[j]), p - 2.0) * g[j];
    };
    // conservative confining drift eta div(y w): inward transport, so the
    // face value comes from the outer cell
    auto dflux = [&](int j) {
        if (j == 0 || j >= m)
            return 0.0;
        return grid.face_area[j] * grid.face_r[j] * v[j];
    };

    double flux_lo = pflux(0);
    double drift_lo = dflux(0);
    for (int i = 0; i <= top; ++i) {
        const double flux_hi = pflux(i + 1);
        const double drift_hi = dflux(i + 1);
        double rate = (flux_hi - flux_lo) / grid.cell_vol[i];
        if (rescaled)
            rate += eta * (drift_hi - drift_lo) / grid.cell_vol[i];
        if (absorb > 0.0) {
            const double h = std::max(std::max(g[i], 0.0), std::max(-g[i + 1], 0.0));
            rate -= absorb * pos_pow(h, q);
        }
        if (full) {
            rate += growth * v[i];
            // outward advection (p-2) eta (N+1) y . grad w / s, upwind from
            // the inner cell; g[i] is exactly that one-sided difference
            rate -= outward * grid.center[i] * g[i];
        }
        v[i] += dt * rate;
        flux_lo = flux_hi;
        drift_lo = drift_hi;
    }

    double linf = 0.0;
    for (int i = 0; i <= top; ++i) {
        if (v[i] < 0.0)
            v[i] = 0.0;
        linf = std::max(linf, v[i]);
    }
    const double eps = std::max(1e-10, 1e-8 * linf);
    int new_hi = -1;
    for (int i = 0; i <= top; ++i) {
        if (v[i] < eps)
            v[i] = 0.0;
        else
            new_hi = i;
    }
    if (new_hi >= m - 2)
        throw std::runtime_error("support reached within 2 cells of r_max = " +
                                 std::to_string(grid.r_max) + " at time " +
                                 std::to_string(state.time) + "; enlarge the domain");
    ++state.step_count;
}

} // namespace

const char* mode_name(Mode mode) {
    switch (mode) {
    case Mode::physical:
        return "physical";
    case Mode::rescaled_full:
        return "rescaled_full";
    case Mode::rescaled_autonomous:
        return "rescaled_autonomous";
    }
    return "unknown";
}

void EvolutionMode::validate() const {
    if (lambda != 0.0 && lambda != 1.0)
        throw std::invalid_argument("absorption coefficient must be 0 or 1");
    if (kind == Mode::rescaled_full && lambda != 1.0)
        throw std::invalid_argument("rescaled_full mode requires absorption = 1");
    if (kind == Mode::rescaled_autonomous && lambda != 0.0)
        throw std::invalid_argument("rescaled_autonomous mode has no absorption term");
}

double stable_dt(const RunState& state, double safety) {
    if (!(safety > 0.0) || safety > 1.0)
        throw std::invalid_argument("safety factor must lie in (0, 1]");
    const int hi = last_positive_index(state.field);
    const double gmax = fill_gradients(state.field, hi, scratch.grad);
    return safety * dt_bound(state, gmax);
}

void step(RunState& state, double dt) {
    if (!(dt > 0.0))
        throw std::invalid_argument("dt must be positive");
    const int hi = last_positive_index(state.field);
    fill_gradients(state.field, hi, scratch.grad);
    apply_update(state, dt, scratch.grad, hi);
    state.time += dt;
}

double advance(RunState& state, double safety, double time_cap) {
    if (!(time_cap > state.time))
        return 0.0;
    const int hi = last_positive_index(state.field);
    const double gmax = fill_gradients(state.field, hi, scratch.grad);
    double dt = safety * dt_bound(state, gmax);
    const double remaining = time_cap - state.time;
    if (dt >= remaining) {
        apply_update(state, remaining, scratch.grad, hi);
        state.time = time_cap;
        return remaining;
    }
    apply_update(state, dt, scratch.grad, hi);
    state.time += dt;
    return dt;
}

std::pair<double, RadialField>
physical_to_rescaled(const RadialField& u, double t, const Params& params,
                     std::shared_ptr<const RadialGrid> target) {
    if (t < 0.0)
        throw std::invalid_argument("physical time must be non-negative");
    const double p = params.p;
    const int n = params.dim;
    const double eta = 1.0 / (p * (n + 1) - 2.0 * n);
    const double base = std::numbers::e + t;
    const double s = std::log(base);
    const double amp = std::pow(base, n * eta) * std::pow(s, p * eta * (n + 1));
    const double stretch = std::pow(base, eta) * std::pow(s, -(p - 2.0) * (n + 1) * eta);

    const RadialGrid& src = *u.grid;
    auto interp = [&](double r) {
        if (r <= src.center[0])
            return u.values[0];
        const double pos = r / src.dr - 0.5;
        const int i = static_cast<int>(pos);
        if (i >= src.m - 1)
            return 0.0;
        const double frac = pos - i;
        return u.values[i] * (1.0 - frac) + u.values[i + 1] * frac;
    };

    RadialField w = sample(std::move(target),
                           [&](double y) { return amp * interp(y * stretch); });
    return {s, w};
}

namespace {

std::function<double(double)> table_evaluator(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open tabulated initial data: " + path);
    auto rs = std::make_shared<std::vector<double>>();
    auto vs = std::make_shared<std::vector<double>>();
    double r, v;
    while (in >> r >> v) {
        if (!rs->empty() && r <= rs->back())
            throw std::runtime_error("tabulated radii must be strictly increasing");
        rs->push_back(r);
        vs->push_back(std::max(0.0, v));
    }
    if (rs->size() < 2)
        throw std::runtime_error("tabulated initial data needs at least 2 rows");
    return [rs, vs](double x) {
        const auto& rr = *rs;
        const auto& vv = *vs;
        if (x <= rr.front())
            return vv.front();
        if (x >= rr.back())
            return 0.0;
        auto it = std::upper_bound(rr.begin(), rr.end(), x);
        const size_t i = static_cast<size_t>(it - rr.begin());
        const double frac = (x - rr[i - 1]) / (rr[i] - rr[i - 1]);
        return vv[i - 1] * (1.0 - frac) + vv[i] * frac;
    };
}

} // namespace

RadialField initial_field(std::shared_ptr<const RadialGrid> grid,
                          const InitialData& data, const Params& params,
                          Mode mode) {
    std::function<double(double)> f;
    switch (data.family) {
    case InitialFamily::barenblatt: {
        if (!(data.amplitude > 0.0))
            throw std::invalid_argument("barenblatt amplitude must be positive");
        const Params p = params;
        const double a = data.amplitude;
        f = [p, a](double r) { return barenblatt_value(a, r, p); };
        break;
    }
    case InitialFamily::gaussian: {
        if (!(data.width > 0.0) || !(data.radius > 0.0))
            throw std::invalid_argument("gaussian needs positive width and radius");
        const double a = data.amplitude, sig = data.width, rc = data.radius;
        const double floor = std::exp(-0.5 * rc * rc / (sig * sig));
        f = [a, sig, rc, floor](double r) {
            if (r >= rc)
                return 0.0;
            return a * (std::exp(-0.5 * r * r / (sig * sig)) - floor);
        };
        break;
    }
    case InitialFamily::plateau: {
        if (!(data.radius > 0.0) || !(data.ramp > 0.0) || data.ramp > data.radius)
            throw std::invalid_argument("plateau needs 0 < ramp <= radius");
        const double h = data.amplitude, rr = data.radius, ramp = data.ramp;
        f = [h, rr, ramp](double r) {
            return h * std::clamp((rr - r) / ramp, 0.0, 1.0);
        };
        break;
    }
    case InitialFamily::annulus: {
        if (!(data.outer_radius > data.inner_radius) || !(data.inner_radius >= 0.0))
            throw std::invalid_argument("annulus needs 0 <= inner < outer radius");
        const double h = data.amplitude, r1 = data.inner_radius, r2 = data.outer_radius;
        f = [h, r1, r2](double r) {
            if (r <= r1 || r >= r2)
                return 0.0;
            const double x = (r - r1) / (r2 - r1);
            return h * 4.0 * x * (1.0 - x);
        };
        break;
    }
    case InitialFamily::table:
        f = table_evaluator(data.path);
        break;
    }

    if (data.rescale_at_s1) {
        if (mode == Mode::physical)
            throw std::invalid_argument("rescale_at_s1 only applies to rescaled modes");
        // change of variables at t = 0: w(y) = e^{N eta} u0(e^{eta} y)
        const double p = params.p;
        const double eta = 1.0 / (p * (params.dim + 1) - 2.0 * params.dim);
        const double amp = std::exp(params.dim * eta);
        const double stretch = std::exp(eta);
        auto base = f;
        f = [base, amp, stretch](double y) { return amp * base(y * stretch); };
    }
    return sample(std::move(grid), f);
}

} // namespace cglab
