#pragma once

#include <cstddef>
#include <functional>

namespace cglab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7,15) quadrature on [a,b].
///
/// Intervals are kept in a worst-error priority queue and split until the
/// summed error estimate drops below `abs_tol`. Handles integrable endpoint
/// singularities (u^{a-1} with a in (0,1)) by clustering splits there.
/// Throws std::runtime_error if the budget of `max_intervals` is exhausted
/// before the tolerance is met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_intervals = 4000);

} // namespace cglab
