#include "abeltau/quadrature.hpp"

#include "abeltau/error.hpp"
#include "abeltau/special.hpp"

#include <algorithm>
#include <cmath>

namespace abeltau {

namespace {

// Eigenvalues and first eigenvector components of a symmetric tridiagonal
// matrix (implicit-shift QL).  diag/offdiag are overwritten; vec0[i] receives
// the first component of the i-th normalized eigenvector.
void tridiag_eigen(std::vector<double>& diag, std::vector<double>& offdiag,
                   std::vector<double>& vec0) {
    const int n = static_cast<int>(diag.size());
    vec0.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0)
        return;
    vec0[0] = 1.0;
    if (n == 1)
        return;

    std::vector<double> e(offdiag);
    e.resize(static_cast<std::size_t>(n), 0.0);

    // z holds the first row of the accumulated rotation product; that is all
    // Golub-Welsch needs from the eigenvectors.
    std::vector<double>& z = vec0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 + 1e-15 * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 80)
                    raise(ErrorKind::quadrature, "tridiagonal eigensolver failed to converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l)
                    continue;
                diag[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

JacobiRule gauss_jacobi(int n_nodes, double theta, double xi) {
    if (n_nodes < 1)
        raise(ErrorKind::domain, "gauss_jacobi requires at least one node");
    if (theta <= -1.0 || xi <= -1.0)
        raise(ErrorKind::domain, "gauss_jacobi requires weight exponents > -1");

    // Monic Jacobi recurrence coefficients on [-1, 1] for (1-x)^a (1+x)^b,
    // a = theta, b = xi; forms below are cancellation-free at k = 0, 1.
    const double a = theta, b = xi;
    const int n = n_nodes;
    std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n > 1 ? n - 1 : 0));

    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag[static_cast<std::size_t>(k)] = (b * b - a * a) / (s * (s + 2.0));
    }
    if (n > 1)
        off[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) /
                           ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b)));
    for (int k = 2; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        off[static_cast<std::size_t>(k - 1)] =
            std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) /
                      (s * s * (s + 1.0) * (s - 1.0)));
    }

    std::vector<double> vec0;
    tridiag_eigen(diag, off, vec0);

    // mu0 = integral of the weight over [-1, 1]
    const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));

    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    JacobiRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double half_scale = std::pow(0.5, a + b + 1.0);
    for (int k = 0; k < n; ++k) {
        const std::size_t i = order[static_cast<std::size_t>(k)];
        // map x in [-1,1] -> u in [0,1]; (1-x)^a(1+x)^b dx = 2^{a+b+1}(1-u)^a u^b du
        rule.nodes[static_cast<std::size_t>(k)] = 0.5 * (diag[i] + 1.0);
        rule.weights[static_cast<std::size_t>(k)] = mu0 * vec0[i] * vec0[i] * half_scale;
    }
    return rule;
}

double tanh_sinh(const std::function<double(double, double)>& f, double rel_tol, int max_level) {
    // Abscissas u(x) = (1 + tanh((pi/2) sinh(x)))/2 on (0,1).  The distance to
    // the near endpoint is computed as E/(1+E) with E = exp(-pi sinh(x)) so it
    // stays accurate down to ~1e-300; the doubly exponential weight decay then
    // tames integrable algebraic singularities at either endpoint.
    const double cutoff = 6.0;

    auto add_pair = [&](double x) {
        const double sh = M_PI_2 * std::sinh(x);
        const double e2 = std::exp(-2.0 * sh);      // = 1 - tanh(sh) over 1 + tanh(sh)
        const double lo = e2 / (1.0 + e2);           // distance to the near endpoint
        const double hi = 1.0 / (1.0 + e2);
        // w = du/dx = (pi/4) cosh(x) / cosh^2(sh), written via e2 to avoid overflow
        const double w = M_PI * std::cosh(x) * e2 / ((1.0 + e2) * (1.0 + e2));
        if (lo <= 0.0 || w <= 0.0)
            return 0.0;
        double fp = f(hi, lo);
        double fm = f(lo, hi);
        if (!std::isfinite(fp))
            fp = 0.0;
        if (!std::isfinite(fm))
            fm = 0.0;
        return w * (fp + fm);
    };

    double h = 1.0;
    double sum = 0.25 * M_PI * f(0.5, 0.5); // x = 0 term: u = 1/2, w = pi/4
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // level 1 fills the whole h = 1/2 grid; afterwards only odd multiples are new
        const int stride = (level == 1) ? 1 : 2;
        double add = 0.0;
        for (int k = 1; k * h <= cutoff; k += stride)
            add += add_pair(k * h);
        const double prev = sum * (2.0 * h);
        sum += add;
        const double cur = sum * h;
        if (level >= 4 && std::fabs(cur - prev) <= rel_tol * std::fabs(cur) + 1e-300)
            return cur;
    }
    return sum * h;
}

} // namespace abeltau
