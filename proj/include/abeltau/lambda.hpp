#ifndef ABELTAU_LAMBDA_HPP
#define ABELTAU_LAMBDA_HPP

#include "abeltau/fracpoly.hpp"
#include "abeltau/problem.hpp"

#include <vector>

namespace abeltau {

// Coefficient-space realization of the weakly singular integral operator
//
//     L Y(t) = Y(t) - int_0^t K(t, s) Y(s) ds.
//
// For kernel expansions k_ij ~ sum k[p][q] t^{p sigma} s^{q sigma} the action
// on monomials is a banded matrix per (i, j) pair:
//
//     int_0^t (t-s)^{alpha_ij - 1} k_ij(t, s) s^{r sigma} ds
//         = (row r+1 of Lambda_ij) . [1, t^sigma, t^{2 sigma}, ...]^T,
//
// whose (r, c) entry (1-based) is ktilde(c - delta - r, r - 1): a sum of
// kernel coefficients against Beta-function moments.  Row r has support only
// in columns delta + r .. delta + r + 2 N_k, so each matrix is strictly upper
// banded; the band edge per pair is its height h_ij.

/// k~_{v,l} = sum_{p+q=v} k[p][q] * Beta(delta*sigma, (q+l)*sigma + 1); zero for v > 2 N_k
double ktilde(const FracBivar& kernel, int delta, int v, int l);

/// dense truncated matrix (1-based contract in entry()); rows x cols
class LambdaMatrix {
public:
    LambdaMatrix() = default;
    LambdaMatrix(const FracBivar& kernel, int delta, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// 1-based; zero outside the built truncation
    double entry(int r, int c) const {
        if (r < 1 || c < 1 || r > rows_ || c > cols_)
            return 0.0;
        return data_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
    }

    /// largest d >= 1 with a nonzero diagonal at offset d (0 for a zero matrix)
    int band_height(double tol = 1e-14) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

struct LambdaSet {
    int n = 0;
    int gamma = 1;
    int rows = 0, cols = 0;
    std::vector<LambdaMatrix> lambdas;  // n*n, row-major over (i, j)
    std::vector<int> pair_heights;      // h_ij
    std::vector<int> heights;           // h_i = max_j h_ij
    std::vector<int> offsets;           // Delta_j = min_i (h_i - h_ij)

    const LambdaMatrix& lambda(int i, int j) const {
        return lambdas[static_cast<std::size_t>(i) * n + j];
    }
    int pair_height(int i, int j) const { return pair_heights[static_cast<std::size_t>(i) * n + j]; }
    int max_height() const;

    /// entry of Lambda~_{ij} = I - Lambda_ii (i = j) or -Lambda_ij (i != j); 1-based,
    /// strict about the truncation so an undersized build cannot pass as zeros
    double tilde(int i, int j, int r, int c) const;
};

// rows must cover the highest monomial index ever pushed through apply_operator
// plus one; cols extend past rows by the band width so no product is clipped.
LambdaSet build_lambda_set(const Problem& problem, int rows);

/// default truncation for a degree-N solve on this problem
int lambda_rows_for(const Problem& problem, int N);

/// L y in coefficient space; raises capacity error when y outruns the truncation
FracPolyVec apply_operator(const FracPolyVec& y, const Problem& problem, const LambdaSet& lam);

} // namespace abeltau

#endif
