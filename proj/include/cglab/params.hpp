#pragma once

namespace cglab {

/// Critical absorption exponent q_* = p - N/(N+1) separating
/// diffusion-dominated from absorption-influenced large-time behavior.
double critical_exponent(double p, int dim);

/// Equation parameters: diffusion exponent p (> 2), space dimension N (>= 1)
/// and absorption exponent q (> 1).
///
/// Most derived quantities (amplitude selection, sub-solution thresholds,
/// the profile integrals) are only meaningful when q equals the critical
/// exponent; `critical` records whether the triple was built that way.
struct Params {
    double p = 3.0;
    int dim = 1;
    double q = 2.5;
    bool critical = true;

    static Params critical_mode(double p, int dim);
    static Params with_exponent(double p, int dim, double q);

    /// Throws std::invalid_argument unless p > 2, dim >= 1, q > 1.
    void validate() const;
};

} // namespace cglab
