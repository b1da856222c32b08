#include <cglab/quadrature.hpp>

#include <cmath>
#include <queue>
#include <stdexcept>

namespace cglab {

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1,1] (QUADPACK dqk15).
constexpr double kron_x[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
constexpr double kron_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double fc = f(mid);
    double kronrod = kron_w[7] * fc;
    double gauss = gauss_w[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kron_x[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kron_w[j] * fsum;
        if (j % 2 == 1)
            gauss += gauss_w[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;

    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_intervals) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b)
        return {0.0, 0.0, 0};

    auto worse = [](const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

    Panel whole = gk15(f, a, b);
    double total = whole.value;
    double total_err = whole.error;
    queue.push(whole);
    int panels = 1;

    while (total_err > abs_tol) {
        if (panels >= max_intervals || queue.empty())
            throw std::runtime_error("adaptive quadrature did not reach tolerance " +
                                     std::to_string(abs_tol) + " within " +
                                     std::to_string(max_intervals) + " intervals");
        Panel top = queue.top();
        queue.pop();
        const double mid = 0.5 * (top.a + top.b);
        if (mid <= top.a || mid >= top.b)
            throw std::runtime_error("adaptive quadrature interval collapsed before "
                                     "reaching the requested tolerance");
        Panel left = gk15(f, top.a, mid);
        Panel right = gk15(f, mid, top.b);
        total += left.value + right.value - top.value;
        total_err += left.error + right.error - top.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    return {total, total_err, panels};
}

} // namespace cglab
