#ifndef ABELTAU_BASIS_HPP
#define ABELTAU_BASIS_HPP

#include "abeltau/fracpoly.hpp"
#include "abeltau/quadrature.hpp"

#include <functional>
#include <vector>

namespace abeltau {

/// weight parameters of the shifted Jacobi family on [0,1]: w(s) = s^xi (1-s)^theta
struct JacobiParams {
    double theta = 0.0;
    double xi = 0.0;
};

/// hard cap on polynomial degree before the explicit coefficient formula
/// degrades; requests beyond it raise a capacity error
inline constexpr int kJacobiDegreeCap = 200;

/// Monomial coefficients (index j = power of s) of the shifted Jacobi
/// polynomial J_n^{theta,xi} on [0,1], from the explicit closed form with all
/// Gamma factors evaluated through log-Gamma.
std::vector<double> jacobi_coeffs(int n, const JacobiParams& params);

/// Values J_0(s), ..., J_n(s) by the three-term recurrence (stable pointwise
/// route, independent of the coefficient formula).
std::vector<double> jacobi_eval_all(int n, const JacobiParams& params, double s);

/// squared weighted L2 norm of J_n^{theta,xi}
double jacobi_norm_sq(int n, const JacobiParams& params);

// Muntz-Legendre polynomials on the lattice sigma = 1/gamma:
//
//     L_i(t) = J_i^{0, 1/sigma - 1}(t^sigma),
//
// orthogonal in plain L2(0,1) with ||L_i||^2 = h_i^{0,1/sigma-1}/sigma.
// The recurrence below reproduces exactly that composition; its variable is
// 2 t^sigma - 1 in coefficient space.
class MuntzBasis {
public:
    MuntzBasis() = default;
    MuntzBasis(int gamma, int max_index);

    int gamma() const { return gamma_; }
    double sigma() const { return 1.0 / gamma_; }
    int max_index() const { return static_cast<int>(polys_.size()) - 1; }

    const FracPoly& poly(int i) const { return polys_[static_cast<std::size_t>(i)]; }
    double norm_sq(int i) const { return norms_[static_cast<std::size_t>(i)]; }

    /// coefficients c_{j,l} of the orthonormal member p_j = L_j / ||L_j||
    FracPoly orthonormal(int j) const;

private:
    int gamma_ = 1;
    std::vector<FracPoly> polys_;
    std::vector<double> norms_;
};

/// ||L_i||^2 on the sigma = 1/gamma lattice without building a basis
double muntz_norm_sq(int i, int gamma);

/// Exact L2(0,1) inner product of two fractional polynomials on one lattice
/// (monomial cross moments integrate in closed form).
double fracpoly_inner(const FracPoly& p, const FracPoly& q);

// L2-orthogonal projection onto span{L_0, ..., L_N}.
//
// The FracPoly overload is exact: inputs already inside the space pass
// through unchanged, otherwise the Muntz expansion is truncated at N.  The
// callable overload integrates against the basis with a Gauss-Jacobi rule in
// x = t^sigma and cross-checks a finer rule; disagreement beyond tolerance
// raises a quadrature error.
FracPoly project(const FracPoly& f, int N);
FracPoly project(const std::function<double(double)>& f, int N, int gamma, int quad_nodes = 0);

/// Muntz expansion coefficients u_0..u_M of a FracPoly (exact route)
std::vector<double> muntz_expand(const FracPoly& f, const MuntzBasis& basis, int M);

/// Tensorized kernel projection: expand k(t, s) on t^{p sigma} s^{q sigma},
/// 0 <= p, q <= max_pq, by projecting per variable (convenience ingestion
/// path for smooth non-polynomial kernels).
FracBivar project_kernel(const std::function<double(double, double)>& k, int max_pq, int gamma,
                         int quad_nodes = 0);

} // namespace abeltau

#endif
