#include <cglab/profiles.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <cglab/quadrature.hpp>

namespace cglab {

namespace {
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
}

double unit_ball_volume(int dim) {
    if (dim < 1)
        throw std::invalid_argument("dimension must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

std::pair<double, double> quad_I1_I2(const Params& params, double tol) {
    params.validate();
    if (!params.critical)
        throw std::invalid_argument("profile integrals require the critical exponent");
    if (!(tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");

    const double p = params.p;
    const int n = params.dim;
    const double q = params.q;
    const double eta = 1.0 / (p * (n + 1) - 2.0 * n);
    const double b0 = (p - 2.0) / p * std::pow(eta, 1.0 / (p - 1.0));

    // u = b0 r^{p/(p-1)} maps both integrals onto beta-type integrands
    // u^{a-1} (1-u)^{c} on [0,1].
    const double a1 = n * (p - 1.0) / p;
    const double c1 = (p - 1.0) / (p - 2.0);
    const double a2 = a1 + q / p;
    const double c2 = q / (p - 2.0);

    auto beta_integrand = [](double a, double c) {
        return [a, c](double u) {
            if (u <= 0.0 || u >= 1.0)
                return 0.0;
            return std::pow(u, a - 1.0) * std::pow(1.0 - u, c);
        };
    };

    const double front1 = (n + 1) * ((p - 1.0) / p) * std::pow(b0, -n * (p - 1.0) / p);
    const double front2 = std::pow(eta, q / (p - 1.0)) * ((p - 1.0) / p) *
                          std::pow(b0, -(n * (p - 1.0) + q) / p);

    const double i1 = front1 *
        integrate_adaptive(beta_integrand(a1, c1), 0.0, 1.0, tol / front1).value;
    const double i2 = front2 *
        integrate_adaptive(beta_integrand(a2, c2), 0.0, 1.0, tol / front2).value;
    return {i1, i2};
}

ProfileConstants compute_constants(const Params& params, double quad_tol) {
    params.validate();

    ProfileConstants c;
    const double p = params.p;
    const int n = params.dim;
    c.eta = 1.0 / (p * (n + 1) - 2.0 * n);
    c.b0 = (p - 2.0) / p * std::pow(c.eta, 1.0 / (p - 1.0));
    c.critical = params.critical;

    if (!params.critical) {
        c.theta = c.a_sub = c.i1 = c.i2 = c.a_star = nan_value;
        return c;
    }

    const double q = params.q;
    // defining sum, not the closed-form product
    c.theta = (q - 1.0) / (p - 2.0) + q / p - 1.0;
    // root of the sub-solution bracket
    c.a_sub = std::pow((n + 1) * p * std::pow(c.b0, q / p) *
                           std::pow(c.eta, -(q - p + 1.0) / (p - 1.0)),
                       1.0 / c.theta);
    auto [i1, i2] = quad_I1_I2(params, quad_tol);
    c.i1 = i1;
    c.i2 = i2;
    c.a_star = std::pow(i1 / i2, p * (p - 2.0) * (n + 1) * c.eta / (p - 1.0));
    return c;
}

double barenblatt_support_radius(double amplitude, const Params& params) {
    const double p = params.p;
    const double eta = 1.0 / (p * (params.dim + 1) - 2.0 * params.dim);
    const double b0 = (p - 2.0) / p * std::pow(eta, 1.0 / (p - 1.0));
    return std::pow(amplitude / b0, (p - 1.0) / p);
}

double barenblatt_value(double amplitude, double r, const Params& params) {
    const double p = params.p;
    const double eta = 1.0 / (p * (params.dim + 1) - 2.0 * params.dim);
    const double b0 = (p - 2.0) / p * std::pow(eta, 1.0 / (p - 1.0));
    const double core = amplitude - b0 * std::pow(r, p / (p - 1.0));
    if (core <= 0.0)
        return 0.0;
    return std::pow(core, (p - 1.0) / (p - 2.0));
}

double barenblatt_gradient_magnitude(double amplitude, double r, const Params& params) {
    const double p = params.p;
    const double eta = 1.0 / (p * (params.dim + 1) - 2.0 * params.dim);
    const double b0 = (p - 2.0) / p * std::pow(eta, 1.0 / (p - 1.0));
    const double core = amplitude - b0 * std::pow(r, p / (p - 1.0));
    if (core <= 0.0 || r <= 0.0)
        return 0.0;
    return std::pow(eta, 1.0 / (p - 1.0)) * std::pow(core, 1.0 / (p - 2.0)) *
           std::pow(r, 1.0 / (p - 1.0));
}

double barenblatt_mass(double amplitude, const Params& params,
                       const ProfileConstants& constants) {
    if (!constants.critical)
        throw std::invalid_argument("barenblatt_mass requires critical-mode constants");
    const double p = params.p;
    const int n = params.dim;
    const double exponent = (p - 1.0) / (p * (p - 2.0) * constants.eta);
    return (static_cast<double>(n) / (n + 1)) * unit_ball_volume(n) * constants.i1 *
           std::pow(amplitude, exponent);
}

double mass_to_amplitude(double mass, const Params& params,
                         const ProfileConstants& constants) {
    if (!constants.critical)
        throw std::invalid_argument("mass_to_amplitude requires critical-mode constants");
    if (!(mass > 0.0))
        throw std::invalid_argument("mass must be positive");
    const double p = params.p;
    const int n = params.dim;
    const double prefactor =
        (static_cast<double>(n) / (n + 1)) * unit_ball_volume(n) * constants.i1;
    const double exponent = p * (p - 2.0) * constants.eta / (p - 1.0);
    return std::pow(mass / prefactor, exponent);
}

double g_of_a(double a, const Params& params, const ProfileConstants& constants) {
    if (!constants.critical)
        throw std::invalid_argument("g_of_a requires critical-mode constants");
    if (!(a > 0.0))
        throw std::invalid_argument("amplitude must be positive");
    const double p = params.p;
    const int n = params.dim;
    const double e1 = (p - 1.0) / (constants.eta * p * (p - 2.0));
    const double e2 = (n + 2) * (p - 1.0) / ((n + 1) * constants.eta * p * (p - 2.0));
    return n * unit_ball_volume(n) *
           (constants.i1 * std::pow(a, e1) - constants.i2 * std::pow(a, e2));
}

double subsolution_residual(double amplitude, double /*s*/, double r,
                            const Params& params) {
    params.validate();
    if (!params.critical)
        throw std::invalid_argument("subsolution_residual requires the critical exponent");
    const double p = params.p;
    const int n = params.dim;
    const double q = params.q;
    const double eta = 1.0 / (p * (n + 1) - 2.0 * n);
    const double b0 = (p - 2.0) / p * std::pow(eta, 1.0 / (p - 1.0));
    const double core = amplitude - b0 * std::pow(r, p / (p - 1.0));
    if (core <= 0.0)
        return 0.0;
    return std::pow(eta, q / (p - 1.0)) * std::pow(core, q / (p - 2.0)) *
               std::pow(r, q / (p - 1.0)) -
           eta * (n + 1) * p * amplitude * std::pow(core, 1.0 / (p - 2.0));
}

} // namespace cglab
