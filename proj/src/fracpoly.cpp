#include "abeltau/fracpoly.hpp"

#include "abeltau/error.hpp"

#include <algorithm>
#include <cmath>

namespace abeltau {

void FracPoly::check_gamma() const {
    if (gamma_ < 1)
        raise(ErrorKind::domain, "FracPoly requires integer gamma >= 1");
}

FracPoly FracPoly::monomial(int gamma, std::size_t l, double c) {
    FracPoly p(gamma);
    p.set_coeff(l, c);
    return p;
}

void FracPoly::set_coeff(std::size_t l, double c) {
    if (coeffs_.size() <= l)
        coeffs_.resize(l + 1, 0.0);
    coeffs_[l] = c;
}

void FracPoly::add_term(std::size_t l, double c) {
    if (coeffs_.size() <= l)
        coeffs_.resize(l + 1, 0.0);
    coeffs_[l] += c;
}

long FracPoly::max_index(double tol) const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (std::fabs(coeffs_[i]) > tol)
            return static_cast<long>(i);
    return -1;
}

long FracPoly::min_index(double tol) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (std::fabs(coeffs_[i]) > tol)
            return static_cast<long>(i);
    return -1;
}

double FracPoly::coeff_norm() const {
    double m = 0.0;
    for (double c : coeffs_)
        m = std::max(m, std::fabs(c));
    return m;
}

double FracPoly::eval(double t) const {
    if (t < 0.0)
        raise(ErrorKind::domain, "FracPoly::eval requires t >= 0");
    if (coeffs_.empty())
        return 0.0;
    // Horner in x = t^sigma; x = 0 yields coeff(0) (0^0 := 1 convention)
    const double x = std::pow(t, sigma());
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

FracPoly FracPoly::axpy(double a, const FracPoly& p) const {
    if (gamma_ != p.gamma_)
        raise(ErrorKind::incompatible_sigma, "axpy on mismatched exponent lattices");
    FracPoly out(gamma_);
    out.coeffs_.assign(std::max(coeffs_.size(), p.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        out.coeffs_[i] += a * p.coeffs_[i];
    return out;
}

FracPoly FracPoly::shift(std::size_t k) const {
    FracPoly out(gamma_);
    if (coeffs_.empty())
        return out;
    out.coeffs_.assign(coeffs_.size() + k, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i + k] = coeffs_[i];
    return out;
}

FracPoly FracPoly::scaled(double a) const {
    FracPoly out = *this;
    for (double& c : out.coeffs_)
        c *= a;
    return out;
}

void FracPoly::drop_trailing_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0)
        coeffs_.pop_back();
}

bool approx_equal(const FracPoly& p, const FracPoly& q, double tol) {
    if (p.gamma() != q.gamma())
        return false;
    const std::size_t m = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = 0; i < m; ++i)
        if (std::fabs(p.coeff(i) - q.coeff(i)) > tol)
            return false;
    return true;
}

FracPolyVec::FracPolyVec(std::vector<FracPoly> comps) : comps_(std::move(comps)) {
    for (const FracPoly& c : comps_)
        if (c.gamma() != comps_.front().gamma())
            raise(ErrorKind::incompatible_sigma, "FracPolyVec components on mixed lattices");
}

FracPolyVec FracPolyVec::axpy(double a, const FracPolyVec& v) const {
    if (size() != v.size())
        raise(ErrorKind::domain, "FracPolyVec::axpy dimension mismatch");
    FracPolyVec out = *this;
    for (int i = 0; i < size(); ++i)
        out[i] = comps_[static_cast<std::size_t>(i)].axpy(a, v[i]);
    return out;
}

FracPolyVec FracPolyVec::scaled(double a) const {
    FracPolyVec out = *this;
    for (int i = 0; i < size(); ++i)
        out[i] = out[i].scaled(a);
    return out;
}

double FracPolyVec::coeff_norm() const {
    double m = 0.0;
    for (const FracPoly& c : comps_)
        m = std::max(m, c.coeff_norm());
    return m;
}

long FracPolyVec::max_index(double tol) const {
    long m = -1;
    for (const FracPoly& c : comps_)
        m = std::max(m, c.max_index(tol));
    return m;
}

std::vector<double> FracPolyVec::eval(double t) const {
    std::vector<double> out;
    out.reserve(comps_.size());
    for (const FracPoly& c : comps_)
        out.push_back(c.eval(t));
    return out;
}

bool approx_equal(const FracPolyVec& p, const FracPolyVec& q, double tol) {
    if (p.size() != q.size())
        return false;
    for (int i = 0; i < p.size(); ++i)
        if (!approx_equal(p[i], q[i], tol))
            return false;
    return true;
}

FracBivar::FracBivar(int gamma, int max_pq) : gamma_(gamma), max_pq_(max_pq) {
    if (gamma < 1)
        raise(ErrorKind::domain, "FracBivar requires integer gamma >= 1");
    if (max_pq >= 0)
        grid_.assign(static_cast<std::size_t>(max_pq + 1) * (max_pq + 1), 0.0);
}

double FracBivar::coeff(int p, int q) const {
    if (p < 0 || q < 0 || p > max_pq_ || q > max_pq_)
        return 0.0;
    return grid_[static_cast<std::size_t>(p) * (max_pq_ + 1) + q];
}

void FracBivar::set_coeff(int p, int q, double c) {
    if (p < 0 || q < 0 || p > max_pq_ || q > max_pq_)
        raise(ErrorKind::capacity, "FracBivar coefficient outside stored grid");
    grid_[static_cast<std::size_t>(p) * (max_pq_ + 1) + q] = c;
}

bool FracBivar::is_zero(double tol) const {
    for (double c : grid_)
        if (std::fabs(c) > tol)
            return false;
    return true;
}

double FracBivar::abs_coeff_sum() const {
    double s = 0.0;
    for (double c : grid_)
        s += std::fabs(c);
    return s;
}

double FracBivar::eval(double t, double s) const {
    const double xt = std::pow(t, 1.0 / gamma_);
    const double xs = std::pow(s, 1.0 / gamma_);
    double acc = 0.0;
    for (int p = max_pq_; p >= 0; --p) {
        double row = 0.0;
        for (int q = max_pq_; q >= 0; --q)
            row = row * xs + coeff(p, q);
        acc = acc * xt + row;
    }
    return acc;
}

} // namespace abeltau
