#include "abeltau/series.hpp"

#include "abeltau/error.hpp"
#include "abeltau/special.hpp"

#include <algorithm>
#include <cmath>

namespace abeltau {

std::vector<double> SeriesSolution::eval(double t) const {
    if (t < 0.0 || t > 1.0)
        raise(ErrorKind::domain, "series evaluation outside [0, 1]");
    const double x = std::pow(t, 1.0 / gamma);
    std::vector<double> out;
    out.reserve(coeffs.size());
    for (const std::vector<double>& c : coeffs) {
        double acc = 0.0;
        for (std::size_t mu = c.size(); mu-- > 0;)
            acc = acc * x + c[mu];
        out.push_back(acc);
    }
    return out;
}

SeriesSolution series_coeffs(const Problem& problem, int M) {
    const int n = problem.n();
    const int gamma = problem.gamma();

    SeriesSolution sol;
    sol.gamma = gamma;
    sol.M = M;
    sol.coeffs.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(M) + 1, 0.0));

    std::vector<std::vector<double>> gbar;
    gbar.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        gbar.push_back(problem.forcing(i).series(M, gamma));

    // ybar[i][mu] = gbar[i][mu]
    //   + sum_j sum_{p,q} k_ij[p][q] * ybar[j][mu - p - q - delta_ij]
    //                    * Beta(alpha_ij, (mu - p)/gamma - alpha_ij + 1),
    // negative back-references count as zero; increasing mu closes the recursion.
    for (int mu = 0; mu <= M; ++mu) {
        for (int i = 0; i < n; ++i) {
            double acc = gbar[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)];
            for (int j = 0; j < n; ++j) {
                const FracBivar& k = problem.kernel(i, j);
                const int nk = k.degree();
                if (nk < 0)
                    continue;
                const int delta = problem.delta(i, j);
                const double alpha = problem.alpha(i, j).value();
                for (int p = 0; p <= nk && p <= mu - delta; ++p) {
                    const double barg = (mu - p) / static_cast<double>(gamma) - alpha + 1.0;
                    double beta_pl = 0.0;
                    bool beta_ready = false;
                    for (int q = 0; q <= nk && p + q <= mu - delta; ++q) {
                        const double kc = k.coeff(p, q);
                        if (kc == 0.0)
                            continue;
                        const int back = mu - p - q - delta;
                        const double yb = sol.coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(back)];
                        if (yb == 0.0)
                            continue;
                        if (!beta_ready) {
                            beta_pl = beta_fn(alpha, barg);
                            beta_ready = true;
                        }
                        acc += kc * yb * beta_pl;
                    }
                }
            }
            sol.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)] = acc;
        }
    }

    sol.radius = radius_estimate(problem, M);
    return sol;
}

std::vector<double> radius_estimate(const Problem& problem, int M, int grid_points) {
    const int n = problem.n();
    const int gamma = problem.gamma();

    // majorant forcing: absolute coefficient series, scanned on a grid
    std::vector<double> d1(static_cast<std::size_t>(n), 0.0);
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
        std::vector<double> abs_g = problem.forcing(i).series(M, gamma);
        for (double& c : abs_g)
            c = std::fabs(c);
        double best = 0.0;
        for (int k = 0; k < grid_points; ++k) {
            const double t = static_cast<double>(k) / (grid_points - 1);
            const double x = std::pow(t, 1.0 / gamma);
            double acc = 0.0;
            for (std::size_t mu = abs_g.size(); mu-- > 0;)
                acc = acc * x + abs_g[mu];
            best = std::max(best, acc);
        }
        d1[static_cast<std::size_t>(i)] = best;
        if (best > 0.0)
            all_zero = false;
    }
    if (all_zero)
        return std::vector<double>(static_cast<std::size_t>(n), 1.0); // zero forcing: zero series everywhere

    // a vanishing component is still majorized by the largest bound, which
    // keeps every eps_i positive
    double dmax = 0.0;
    for (double v : d1)
        dmax = std::max(dmax, v);
    for (double& v : d1)
        if (v == 0.0)
            v = dmax;

    double alpha_min = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            alpha_min = std::min(alpha_min, problem.alpha(i, j).value());

    std::vector<double> eps(static_cast<std::size_t>(n), 1.0);
    for (int i = 0; i < n; ++i) {
        double d2 = 0.0;
        for (int j = 0; j < n; ++j) {
            // majorant kernel max over the grid square; absolute coefficients
            // make the max sit at (1, 1), i.e. the plain coefficient sum
            d2 += d1[static_cast<std::size_t>(j)] * problem.kernel(i, j).abs_coeff_sum();
        }
        d2 *= 2.0 / alpha_min;
        if (d2 > 0.0)
            eps[static_cast<std::size_t>(i)] =
                std::min(1.0, std::pow(d1[static_cast<std::size_t>(i)] / d2, 1.0 / alpha_min));
    }
    return eps;
}

double comparison_window(const std::vector<double>& radius) {
    double m = 1.0;
    for (double r : radius)
        m = std::min(m, r);
    return 0.5 * m;
}

} // namespace abeltau
