#include <cglab/params.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cglab {

double critical_exponent(double p, int dim) {
    return p - static_cast<double>(dim) / (dim + 1);
}

Params Params::critical_mode(double p, int dim) {
    Params params{p, dim, critical_exponent(p, dim), true};
    params.validate();
    return params;
}

Params Params::with_exponent(double p, int dim, double q) {
    Params params{p, dim, q, q == critical_exponent(p, dim)};
    params.validate();
    return params;
}

void Params::validate() const {
    if (!(p > 2.0) || !std::isfinite(p))
        throw std::invalid_argument("p must be finite and > 2, got " + std::to_string(p));
    if (dim < 1)
        throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(dim));
    if (!(q > 1.0) || !std::isfinite(q))
        throw std::invalid_argument("q must be finite and > 1, got " + std::to_string(q));
}

} // namespace cglab
