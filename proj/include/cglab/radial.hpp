#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace cglab {

/// Cell-centered radial grid on [0, r_max] with m cells of width dr.
/// The dimension enters only through face areas and cell volumes.
struct RadialGrid {
    double r_max = 0.0;
    int m = 0;
    int dim = 1;
    double dr = 0.0;
    std::vector<double> center;    // m cell centers (i+1/2) dr
    std::vector<double> face_r;    // m+1 face radii i dr
    std::vector<double> face_area; // m+1, N omega_N r^{N-1}
    std::vector<double> cell_vol;  // m, omega_N (r_out^N - r_in^N)

    static std::shared_ptr<const RadialGrid> make(double r_max, int m, int dim);
};

/// Non-negative scalar field on a radial grid (cell averages).
struct RadialField {
    std::shared_ptr<const RadialGrid> grid;
    std::vector<double> values;
};

RadialField zero_field(std::shared_ptr<const RadialGrid> grid);

/// Samples f at cell centers, clipping negatives to zero.
RadialField sample(std::shared_ptr<const RadialGrid> grid,
                   const std::function<double(double)>& f);

/// Face gradients (v_{i} - v_{i-1})/dr; zero at the origin face by symmetry,
/// homogeneous Dirichlet ghost beyond the outer face. Size m+1.
std::vector<double> face_gradients(const RadialField& field);

/// div(|grad u|^{p-2} grad u) per cell via face fluxes; zero flux at r = 0.
std::vector<double> p_laplacian_divergence(const RadialField& field, double p);

/// Monotone (Godunov) gradient magnitude per cell:
/// max(max(D-, 0), max(-D+, 0)) with one-sided differences D+-.
std::vector<double> godunov_gradient_magnitude(const RadialField& field);

struct FieldNorms {
    double l1 = 0.0;
    double linf = 0.0;
    double grad_linf = 0.0;
    double grad_lq_q = 0.0; // face-weighted sum of |g|^q
};

FieldNorms norms(const RadialField& field, double q);

/// Face-volume weighted sum of |g|^mu over faces (mu >= 1).
double face_weighted_gradient_sum(const RadialField& field, double mu);

/// Outer edge of the last cell whose value exceeds
/// max(1e-10, 1e-8 * linf); zero for the zero field.
double support_radius(const RadialField& field);

/// Index of the last cell with a positive value, or -1.
int last_positive_index(const RadialField& field);

} // namespace cglab
