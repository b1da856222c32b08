#include <cglab/radial.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <cglab/profiles.hpp>

namespace cglab {

namespace {

double int_pow(double x, int n) {
    double out = 1.0;
    for (int k = 0; k < n; ++k)
        out *= x;
    return out;
}

// |x|^e for the handful of exponents the hot loops actually see.
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

} // namespace

std::shared_ptr<const RadialGrid> RadialGrid::make(double r_max, int m, int dim) {
    if (!(r_max > 0.0))
        throw std::invalid_argument("grid radius must be positive");
    if (m < 16)
        throw std::invalid_argument("grid needs at least 16 cells");
    if (dim < 1)
        throw std::invalid_argument("dimension must be >= 1");

    auto grid = std::make_shared<RadialGrid>();
    grid->r_max = r_max;
    grid->m = m;
    grid->dim = dim;
    grid->dr = r_max / m;

    const double omega = unit_ball_volume(dim);
    grid->center.resize(m);
    grid->face_r.resize(m + 1);
    grid->face_area.resize(m + 1);
    grid->cell_vol.resize(m);
    for (int i = 0; i <= m; ++i) {
        grid->face_r[i] = i * grid->dr;
        grid->face_area[i] = dim * omega * int_pow(grid->face_r[i], dim - 1);
    }
    for (int i = 0; i < m; ++i) {
        grid->center[i] = (i + 0.5) * grid->dr;
        grid->cell_vol[i] = omega * (int_pow(grid->face_r[i + 1], dim) -
                                     int_pow(grid->face_r[i], dim));
    }
    return grid;
}

RadialField zero_field(std::shared_ptr<const RadialGrid> grid) {
    RadialField field;
    field.values.assign(grid->m, 0.0);
    field.grid = std::move(grid);
    return field;
}

RadialField sample(std::shared_ptr<const RadialGrid> grid,
                   const std::function<double(double)>& f) {
    RadialField field = zero_field(std::move(grid));
    for (int i = 0; i < field.grid->m; ++i)
        field.values[i] = std::max(0.0, f(field.grid->center[i]));
    return field;
}

std::vector<double> face_gradients(const RadialField& field) {
    const int m = field.grid->m;
    const double inv_dr = 1.0 / field.grid->dr;
    const auto& v = field.values;
    std::vector<double> g(m + 1);
    g[0] = 0.0; // symmetry at the origin
    for (int i = 1; i < m; ++i)
        g[i] = (v[i] - v[i - 1]) * inv_dr;
    g[m] = (0.0 - v[m - 1]) * inv_dr; // Dirichlet ghost
    return g;
}

std::vector<double> p_laplacian_divergence(const RadialField& field, double p) {
    if (!(p > 2.0))
        throw std::invalid_argument("p must exceed 2");
    const RadialGrid& grid = *field.grid;
    const int m = grid.m;
    const std::vector<double> g = face_gradients(field);

    std::vector<double> flux(m + 1);
    flux[0] = 0.0;
    for (int i = 1; i <= m; ++i)
        flux[i] = grid.face_area[i] * pos_pow(std::fabs(g[i]), p - 2.0) * g[i];

    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = (flux[i + 1] - flux[i]) / grid.cell_vol[i];
    return out;
}

std::vector<double> godunov_gradient_magnitude(const RadialField& field) {
    const int m = field.grid->m;
    const std::vector<double> g = face_gradients(field);
    std::vector<double> h(m);
    for (int i = 0; i < m; ++i) {
        const double down = std::max(g[i], 0.0);      // D- = inner face gradient
        const double up = std::max(-g[i + 1], 0.0);   // -D+ = outer face gradient
        h[i] = std::max(down, up);
    }
    return h;
}

double face_weighted_gradient_sum(const RadialField& field, double mu) {
    if (!(mu >= 1.0))
        throw std::invalid_argument("exponent must be >= 1");
    const RadialGrid& grid = *field.grid;
    const int m = grid.m;
    const std::vector<double> g = face_gradients(field);
    double sum = 0.0;
    for (int i = 1; i < m; ++i) {
        const double w = 0.5 * (grid.cell_vol[i - 1] + grid.cell_vol[i]);
        sum += pos_pow(std::fabs(g[i]), mu) * w;
    }
    sum += pos_pow(std::fabs(g[m]), mu) * 0.5 * grid.cell_vol[m - 1];
    return sum;
}

FieldNorms norms(const RadialField& field, double q) {
    if (!(q > 1.0))
        throw std::invalid_argument("norm exponent must exceed 1");
    const RadialGrid& grid = *field.grid;
    FieldNorms out;
    for (int i = 0; i < grid.m; ++i) {
        out.l1 += grid.cell_vol[i] * field.values[i];
        out.linf = std::max(out.linf, field.values[i]);
    }
    for (double g : face_gradients(field))
        out.grad_linf = std::max(out.grad_linf, std::fabs(g));
    out.grad_lq_q = face_weighted_gradient_sum(field, q);
    return out;
}

int last_positive_index(const RadialField& field) {
    for (int i = field.grid->m - 1; i >= 0; --i)
        if (field.values[i] > 0.0)
            return i;
    return -1;
}

double support_radius(const RadialField& field) {
    double linf = 0.0;
    for (double v : field.values)
        linf = std::max(linf, v);
    const double eps = std::max(1e-10, 1e-8 * linf);
    for (int i = field.grid->m - 1; i >= 0; --i)
        if (field.values[i] > eps)
            return field.grid->face_r[i + 1];
    return 0.0;
}

} // namespace cglab
