#include "abeltau/problem.hpp"

#include "abeltau/error.hpp"

#include <numeric>
#include <string>

namespace abeltau {

Rational::Rational(long n, long d) {
    if (d == 0)
        raise(ErrorKind::config, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stol(text), 1);
        return Rational(std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1)));
    } catch (const std::exception&) {
        raise(ErrorKind::config, "cannot parse rational '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.den == 1)
        return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Forcing Forcing::exact(FracPoly p) {
    Forcing f;
    f.exact_ = std::move(p);
    return f;
}

Forcing Forcing::callable(std::function<double(double)> fn,
                          std::function<std::vector<double>(int)> series) {
    Forcing f;
    f.fn_ = std::move(fn);
    f.series_ = std::move(series);
    return f;
}

const FracPoly& Forcing::exact_poly() const {
    if (!exact_)
        raise(ErrorKind::internal, "forcing has no exact coefficient form");
    return *exact_;
}

double Forcing::eval(double t) const {
    if (exact_)
        return exact_->eval(t);
    if (fn_)
        return fn_(t);
    return 0.0;
}

std::vector<double> Forcing::series(int M, int gamma) const {
    if (exact_) {
        if (exact_->gamma() != gamma)
            raise(ErrorKind::incompatible_sigma, "forcing lattice differs from problem lattice");
        std::vector<double> out(static_cast<std::size_t>(M) + 1, 0.0);
        for (int l = 0; l <= M; ++l)
            out[static_cast<std::size_t>(l)] = exact_->coeff(static_cast<std::size_t>(l));
        return out;
    }
    if (series_) {
        std::vector<double> out = series_(M);
        out.resize(static_cast<std::size_t>(M) + 1, 0.0);
        return out;
    }
    if (!fn_) {
        return std::vector<double>(static_cast<std::size_t>(M) + 1, 0.0);
    }
    raise(ErrorKind::unsupported_input,
          "forcing has no fractional-power expansion; supply coefficients or a series rule");
}

Problem Problem::build(int n, std::vector<Rational> alphas, std::vector<FracBivar> kernels,
                       std::vector<Forcing> forcing) {
    if (n < 1)
        raise(ErrorKind::config, "system dimension must be >= 1");
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    if (alphas.size() != nn || kernels.size() != nn || forcing.size() != static_cast<std::size_t>(n))
        raise(ErrorKind::config, "problem arrays do not match dimension n");

    Problem p;
    p.n_ = n;
    p.alphas_ = std::move(alphas);
    p.kernels_ = std::move(kernels);
    p.forcing_ = std::move(forcing);

    long gamma = 1;
    for (const Rational& a : p.alphas_) {
        if (a.num <= 0 || a.num > a.den)
            raise(ErrorKind::config,
                  "exponent " + to_string(a) + " outside (0, 1]: every alpha_ij must satisfy 0 < a/b <= 1");
        gamma = std::lcm(gamma, a.den);
        if (gamma > 64)
            raise(ErrorKind::config, "combined exponent lattice too fine (gamma > 64)");
    }
    p.gamma_ = static_cast<int>(gamma);

    p.deltas_.resize(nn);
    for (std::size_t k = 0; k < nn; ++k)
        p.deltas_[k] = static_cast<int>(p.alphas_[k].num * (gamma / p.alphas_[k].den));

    for (const FracBivar& kb : p.kernels_)
        if (kb.degree() >= 0 && kb.gamma() != p.gamma_)
            raise(ErrorKind::config, "kernel lattice differs from problem lattice");
    return p;
}

int Problem::max_delta() const {
    int m = 0;
    for (int d : deltas_)
        m = std::max(m, d);
    return m;
}

int Problem::max_kernel_degree() const {
    int m = 0;
    for (const FracBivar& k : kernels_)
        m = std::max(m, k.degree());
    return m;
}

} // namespace abeltau
