#ifndef ABELTAU_EXAMPLES_HPP
#define ABELTAU_EXAMPLES_HPP

#include "abeltau/config.hpp"

#include <vector>

namespace abeltau {

// Four built-in benchmark systems, selectable as --example 1..4 in the CLI.
//
//   1: constant kernels with 1/Gamma(1/4) weights, alpha = 1/4 everywhere;
//      the exact solution [t^{5/4}, (5 Gamma(1/4)/16) t] is reachable at
//      N = 6 with vanishing tau parameters.
//   2: exponents {4/5, 3/5; 2/5, 1/5}; exact solution [t + t^2, t - t^2].
//   3: exponents {1/4, 3/4; 1/4, 1/2}; exact solution [arctan(sqrt t), t^{3/4}].
//   4: exponents 1/2 with one vanishing kernel; exact solution
//      [1 - e^{pi t} erfc(sqrt(pi t)), sqrt t].
ProblemConfig builtin_example(int k);

/// special-function registry entry points (pointwise values)
double fn_arctan_sqrt(double t);
double fn_abel14_arctan_sqrt(double t); // int_0^t (t-s)^{-3/4} arctan(sqrt s) ds
double fn_erfc_comb(double t);          // 1 - e^{pi t} erfc(sqrt(pi t))

/// fractional-power coefficients (index l |-> coefficient of t^{l/gamma}) up
/// to index M; raises unsupported_input when the lattice cannot carry them
std::vector<double> series_arctan_sqrt(int M, int gamma);
std::vector<double> series_abel14_arctan_sqrt(int M, int gamma);
std::vector<double> series_erfc_comb(int M, int gamma);

} // namespace abeltau

#endif
