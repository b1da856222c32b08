#pragma once

#include <memory>
#include <string>
#include <utility>

#include <cglab/params.hpp>
#include <cglab/radial.hpp>

namespace cglab {

/// Which equation is being integrated.
///
///   physical            d_t u = Delta_p u - lambda |grad u|^q
///   rescaled_full       d_s w = Delta_p w + eta div(y w)
///                             - (1/s)[lambda |grad w|^q - p eta (N+1) w
///                                     + (p-2) eta (N+1) y . grad w]
///   rescaled_autonomous d_s v = Delta_p v + eta div(y v)
enum class Mode { physical, rescaled_full, rescaled_autonomous };

const char* mode_name(Mode mode);

struct EvolutionMode {
    Mode kind = Mode::physical;
    double lambda = 1.0; // absorption on/off, in {0, 1}

    /// lambda = 0 is a pure-diffusion test mode, only allowed outside
    /// rescaled_full; rescaled_autonomous has no absorption term at all.
    void validate() const;
};

struct RunState {
    RadialField field;
    double time = 0.0; // t in physical mode, s >= 1 in rescaled modes
    Params params;
    EvolutionMode mode;
    long long step_count = 0;
};

/// Largest stable explicit step for the current field, scaled by `safety`:
/// min of the diffusion bound dr^2/(2N(p-1) Gmax^{p-2}), the drift bound
/// dr/(eta r_max (1 + (p-2)(N+1)/s)) in rescaled modes and the absorption
/// bound dr/(q Gmax^{q-1}) when lambda = 1, each guarded by eps = 1e-30
/// so the zero field yields a finite positive dt.
double stable_dt(const RunState& state, double safety);

/// One forward-Euler step of size dt. Negative values are clamped to zero
/// and values below max(1e-10, 1e-8 linf) are flushed to exact zero to keep
/// the discrete support crisp. Throws std::runtime_error if the support
/// reaches within two cells of r_max.
void step(RunState& state, double dt);

/// Fused stable_dt + step sharing one gradient pass; dt is additionally
/// capped so the state lands exactly on time_cap. Returns the dt taken.
double advance(RunState& state, double safety, double time_cap);

/// Change of variables from (t, u) to (s, w):
///   s = log(e + t),
///   w(y) = (e+t)^{N eta} s^{p eta (N+1)} u(y (e+t)^{eta} s^{-(p-2)(N+1) eta})
/// resampled onto `target` by monotone linear interpolation.
std::pair<double, RadialField>
physical_to_rescaled(const RadialField& u, double t, const Params& params,
                     std::shared_ptr<const RadialGrid> target);

/// Compactly supported initial data families.
enum class InitialFamily { barenblatt, gaussian, plateau, annulus, table };

struct InitialData {
    InitialFamily family = InitialFamily::gaussian;
    double amplitude = 1.0;    // A for barenblatt, peak height otherwise
    double width = 1.0;        // gaussian sigma
    double radius = 2.0;       // gaussian cutoff / plateau outer radius
    double inner_radius = 1.0; // annulus
    double outer_radius = 2.0; // annulus
    double ramp = 0.4;         // plateau linear ramp width
    std::string path;          // table: file of "r value" rows
    /// In rescaled modes, treat the family as physical data at t = 0 and
    /// apply the change of variables before sampling.
    bool rescale_at_s1 = false;
};

RadialField initial_field(std::shared_ptr<const RadialGrid> grid,
                          const InitialData& data, const Params& params,
                          Mode mode);

} // namespace cglab
