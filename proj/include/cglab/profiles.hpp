#pragma once

#include <utility>

#include <cglab/params.hpp>

namespace cglab {

/// Scalar constants attached to a parameter triple (p, N, q).
///
/// `eta` and `b0` depend on (p, N) only and are always populated.
/// The remaining fields require the critical exponent q = p - N/(N+1);
/// for non-critical q they are left as NaN and `critical` is false.
///
///   eta    = 1 / (p(N+1) - 2N), the self-similar time exponent
///   b0     = ((p-2)/p) eta^{1/(p-1)}, the profile curvature constant
///   theta  = (q-1)/(p-2) + q/p - 1
///   a_sub  = [ (N+1) p b0^{q/p} eta^{-(q-p+1)/(p-1)} ]^{1/theta},
///            amplitudes below it make B_A a sub-solution of the
///            rescaled flow
///   i1, i2 = the radial profile integrals (see quad_I1_I2)
///   a_star = (i1/i2)^{p(p-2)(N+1)eta/(p-1)}, the selected amplitude
struct ProfileConstants {
    double eta = 0.0;
    double b0 = 0.0;
    bool critical = false;
    double theta = 0.0;
    double a_sub = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
    double a_star = 0.0;
};

/// Volume of the unit ball in dimension N.
double unit_ball_volume(int dim);

/// Populates every constant for the given parameters.
/// I1/I2 are evaluated by adaptive quadrature with absolute error <= quad_tol.
/// Throws std::invalid_argument for invalid parameters; for non-critical q
/// the critical-only fields are returned as NaN with critical = false.
ProfileConstants compute_constants(const Params& params, double quad_tol = 1e-10);

/// The two profile integrals
///   I1 = (N+1) int_0^inf (1 - b0 r^{p/(p-1)})_+^{(p-1)/(p-2)} r^{N-1} dr
///   I2 = eta^{q/(p-1)} int_0^inf (1 - b0 r^{p/(p-1)})_+^{q/(p-2)}
///                      r^{N-1+q/(p-1)} dr
/// each with absolute error <= tol. The substitution u = b0 r^{p/(p-1)}
/// turns both into beta-type integrals on [0,1] before quadrature, which
/// removes the fractional-power kink at the free boundary.
std::pair<double, double> quad_I1_I2(const Params& params, double tol);

/// Barenblatt profile B_A(r) = (A - b0 r^{p/(p-1)})_+^{(p-1)/(p-2)}.
/// Exactly zero for r >= (A/b0)^{(p-1)/p}.
double barenblatt_value(double amplitude, double r, const Params& params);

/// Interface radius (A/b0)^{(p-1)/p} of the profile's support.
double barenblatt_support_radius(double amplitude, const Params& params);

/// |B_A'(r)| = eta^{1/(p-1)} (A - b0 r^{p/(p-1)})_+^{1/(p-2)} r^{1/(p-1)}.
double barenblatt_gradient_magnitude(double amplitude, double r, const Params& params);

/// Total mass of B_A: (N/(N+1)) omega_N I1 A^{(p-1)/(p(p-2)eta)}.
double barenblatt_mass(double amplitude, const Params& params,
                       const ProfileConstants& constants);

/// Inverse of barenblatt_mass: the unique A > 0 whose profile carries the
/// given mass (closed-form inversion of the power law).
double mass_to_amplitude(double mass, const Params& params,
                         const ProfileConstants& constants);

/// g(a) = N omega_N [ I1 a^{(p-1)/(eta p(p-2))}
///                  - I2 a^{(N+2)(p-1)/((N+1)eta p(p-2))} ].
/// Equals the mass production rate G of the profile B_a; vanishes only at
/// a = a_star, positive below it and negative above it.
double g_of_a(double a, const Params& params, const ProfileConstants& constants);

/// Residual of B_A against the full rescaled operator, scaled by -s (the
/// value is independent of s):
///   eta^{q/(p-1)} (A - b0 r^{p/(p-1)})_+^{q/(p-2)} r^{q/(p-1)}
///   - eta (N+1) p A (A - b0 r^{p/(p-1)})_+^{1/(p-2)}
/// Non-positive everywhere when A < a_sub.
double subsolution_residual(double amplitude, double s, double r,
                            const Params& params);

} // namespace cglab
