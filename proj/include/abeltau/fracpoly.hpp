#ifndef ABELTAU_FRACPOLY_HPP
#define ABELTAU_FRACPOLY_HPP

#include <cstddef>
#include <vector>

namespace abeltau {

// Every quantity in the solver lives on the exponent lattice {l/gamma : l >= 0}
// for one integer gamma >= 1 (sigma = 1/gamma).  A FracPoly stores the dense
// coefficient vector of sum_l c[l] t^{l sigma}; index l is the only degree
// notion used anywhere.

class FracPoly {
public:
    FracPoly() = default;
    explicit FracPoly(int gamma) : gamma_(gamma) { check_gamma(); }
    FracPoly(int gamma, std::vector<double> coeffs) : gamma_(gamma), coeffs_(std::move(coeffs)) {
        check_gamma();
    }

    /// single term c * t^{l sigma}
    static FracPoly monomial(int gamma, std::size_t l, double c = 1.0);
    static FracPoly zero(int gamma) { return FracPoly(gamma); }

    int gamma() const { return gamma_; }
    double sigma() const { return 1.0 / gamma_; }

    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t l) const { return l < coeffs_.size() ? coeffs_[l] : 0.0; }
    void set_coeff(std::size_t l, double c);

    /// index of the highest stored coefficient with |c| > tol, or -1 if none
    long max_index(double tol = 0.0) const;
    /// index of the lowest coefficient with |c| > tol, or -1 if none
    long min_index(double tol = 0.0) const;

    bool is_zero(double tol = 0.0) const { return max_index(tol) < 0; }

    /// max |c[l]| (coefficient-space norm)
    double coeff_norm() const;

    /// value at t in [0, 1]; t = 0 returns coeff(0)
    double eval(double t) const;

    /// this + a*p, coefficientwise; lattices must match
    FracPoly axpy(double a, const FracPoly& p) const;
    /// multiply by t^{k sigma}: coefficient at l moves to l + k
    FracPoly shift(std::size_t k) const;
    FracPoly scaled(double a) const;

    void add_term(std::size_t l, double c);
    void drop_trailing_zeros();

private:
    void check_gamma() const;

    int gamma_ = 1;
    std::vector<double> coeffs_;
};

/// equality as coefficient maps (trailing zeros ignored), |difference| <= tol
bool approx_equal(const FracPoly& p, const FracPoly& q, double tol = 1e-12);

/// n components on one lattice
class FracPolyVec {
public:
    FracPolyVec() = default;
    FracPolyVec(int gamma, int n) : comps_(static_cast<std::size_t>(n), FracPoly(gamma)) {}
    explicit FracPolyVec(std::vector<FracPoly> comps);

    int size() const { return static_cast<int>(comps_.size()); }
    int gamma() const { return comps_.empty() ? 1 : comps_.front().gamma(); }

    FracPoly& operator[](int i) { return comps_[static_cast<std::size_t>(i)]; }
    const FracPoly& operator[](int i) const { return comps_[static_cast<std::size_t>(i)]; }

    FracPolyVec axpy(double a, const FracPolyVec& v) const;
    FracPolyVec scaled(double a) const;

    double coeff_norm() const;
    long max_index(double tol = 0.0) const;

    std::vector<double> eval(double t) const;

private:
    std::vector<FracPoly> comps_;
};

bool approx_equal(const FracPolyVec& p, const FracPolyVec& q, double tol = 1e-12);

/// rectangular coefficient grid of a kernel sum_{p,q} k[p][q] t^{p sigma} s^{q sigma}
class FracBivar {
public:
    FracBivar() = default;
    FracBivar(int gamma, int max_pq);

    int gamma() const { return gamma_; }
    /// N_k: p, q run over 0..degree()
    int degree() const { return max_pq_; }

    double coeff(int p, int q) const;
    void set_coeff(int p, int q, double c);

    bool is_zero(double tol = 0.0) const;
    /// sum of |coefficients| (used by majorant bounds)
    double abs_coeff_sum() const;

    double eval(double t, double s) const;

private:
    int gamma_ = 1;
    int max_pq_ = -1; // -1: identically zero kernel with no stored grid
    std::vector<double> grid_;
};

} // namespace abeltau

#endif
