#ifndef ABELTAU_TESTS_SUPPORT_HPP
#define ABELTAU_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "abeltau/error.hpp"
#include "abeltau/fracpoly.hpp"
#include "abeltau/problem.hpp"
#include "abeltau/special.hpp"

#include <cmath>
#include <vector>

namespace testsup {

/// n=1 problem with one constant kernel c (t-s)^{alpha-1} and given forcing
inline abeltau::Problem scalar_problem(abeltau::Rational alpha, double c, abeltau::Forcing g) {
    const long gamma = alpha.den;
    abeltau::FracBivar k(static_cast<int>(gamma), 0);
    k.set_coeff(0, 0, c);
    return abeltau::Problem::build(1, {alpha}, {std::move(k)}, {std::move(g)});
}

inline bool coeffs_close(const abeltau::FracPoly& p, const std::vector<double>& expect,
                         double tol = 1e-12) {
    for (std::size_t l = 0; l < expect.size(); ++l)
        if (std::fabs(p.coeff(l) - expect[l]) > tol)
            return false;
    return p.max_index(tol) < static_cast<long>(expect.size());
}

} // namespace testsup

using testsup::coeffs_close;

#endif
