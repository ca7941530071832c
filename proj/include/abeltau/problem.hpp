#ifndef ABELTAU_PROBLEM_HPP
#define ABELTAU_PROBLEM_HPP

#include "abeltau/fracpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace abeltau {

/// reduced fraction with positive denominator
struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// One forcing component.  Either an exact coefficient vector on the problem
// lattice, or a pointwise callable to be projected; an optional series
// generator supplies fractional-power coefficients (index l |-> coefficient
// of t^{l sigma}, up to a requested index) for the power-series oracle.
class Forcing {
public:
    Forcing() = default;

    static Forcing exact(FracPoly p);
    static Forcing callable(std::function<double(double)> f,
                            std::function<std::vector<double>(int)> series = nullptr);

    bool has_exact() const { return exact_.has_value(); }
    const FracPoly& exact_poly() const;
    double eval(double t) const;

    bool has_series() const { return exact_.has_value() || series_ != nullptr; }
    /// coefficients 0..M on the lattice; raises unsupported_input when absent
    std::vector<double> series(int M, int gamma) const;

    bool is_zero() const { return !exact_ && !fn_; }

private:
    std::optional<FracPoly> exact_;
    std::function<double(double)> fn_;
    std::function<std::vector<double>(int)> series_;
};

// Problem data for the system
//
//     y_i(t) = g_i(t) + sum_j int_0^t (t-s)^{alpha_ij - 1} k_ij(t, s) y_j(s) ds
//
// with rational exponents alpha_ij = a/b in (0, 1].  gamma is the lcm of all
// denominators, sigma = 1/gamma, and delta_ij = gamma * alpha_ij is a positive
// integer.
class Problem {
public:
    Problem() = default;

    /// validates exponents, computes gamma/delta, checks lattice consistency
    static Problem build(int n, std::vector<Rational> alphas, std::vector<FracBivar> kernels,
                         std::vector<Forcing> forcing);

    int n() const { return n_; }
    int gamma() const { return gamma_; }
    double sigma() const { return 1.0 / gamma_; }

    const Rational& alpha(int i, int j) const { return alphas_[idx(i, j)]; }
    int delta(int i, int j) const { return deltas_[idx(i, j)]; }
    int max_delta() const;

    const FracBivar& kernel(int i, int j) const { return kernels_[idx(i, j)]; }
    int max_kernel_degree() const;

    const Forcing& forcing(int i) const { return forcing_[static_cast<std::size_t>(i)]; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    int gamma_ = 1;
    std::vector<Rational> alphas_;
    std::vector<int> deltas_;
    std::vector<FracBivar> kernels_;
    std::vector<Forcing> forcing_;
};

} // namespace abeltau

#endif
