#ifndef ABELTAU_SERIES_HPP
#define ABELTAU_SERIES_HPP

#include "abeltau/problem.hpp"

#include <vector>

namespace abeltau {

// Brute-force solution engine independent of the Tau machinery: the solution
// components admit expansions y_i(t) = sum_mu ybar[i][mu] t^{mu/gamma} near
// the origin, whose coefficients follow a closed recursion in increasing mu
// once the forcing and kernels are expanded on the same lattice.  A majorant
// bound supplies a per-component radius estimate eps_i; comparisons against
// the Tau solution are made on [0, min_i eps_i / 2].

struct SeriesSolution {
    int gamma = 1;
    int M = 0;                                // truncation index
    std::vector<std::vector<double>> coeffs;  // coeffs[i][mu], mu = 0..M
    std::vector<double> radius;               // eps_i per component

    double sigma() const { return 1.0 / gamma; }
    /// truncated series value of every component; t must lie in [0, 1]
    std::vector<double> eval(double t) const;
};

/// recursive coefficients up to index M plus the radius estimate
SeriesSolution series_coeffs(const Problem& problem, int M);

/// majorant-based convergence radius per component (1 when the forcing
/// vanishes identically); grid_points controls the maxima scan
std::vector<double> radius_estimate(const Problem& problem, int M = 80, int grid_points = 201);

/// safe comparison window [0, min_i eps_i / 2]
double comparison_window(const std::vector<double>& radius);

} // namespace abeltau

#endif
