#include "abeltau/examples.hpp"

#include "abeltau/error.hpp"
#include "abeltau/quadrature.hpp"
#include "abeltau/special.hpp"

#include <cmath>
#include <string>

namespace abeltau {

double fn_arctan_sqrt(double t) { return std::atan(std::sqrt(t)); }

namespace {

// arctan(sqrt z)/sqrt z, analytic on [0, 1]
double atan_sqrt_over_sqrt(double z) {
    if (z < 1e-8)
        return 1.0 - z / 3.0 + z * z / 5.0;
    const double r = std::sqrt(z);
    return std::atan(r) / r;
}

} // namespace

double fn_abel14_arctan_sqrt(double t) {
    // substitute s = t u and factor the sqrt branch into the weight:
    //   t^{3/4} int_0^1 (1-u)^{-3/4} u^{1/2} [arctan(sqrt(tu))/sqrt(tu)] du
    static const JacobiRule rule = gauss_jacobi(48, -0.75, 0.5);
    if (t <= 0.0)
        return 0.0;
    const double inner = rule.integrate([&](double u) { return atan_sqrt_over_sqrt(t * u); });
    return std::pow(t, 0.75) * inner;
}

double fn_erfc_comb(double t) {
    return 1.0 - std::exp(M_PI * t) * std::erfc(std::sqrt(M_PI * t));
}

std::vector<double> series_arctan_sqrt(int M, int gamma) {
    if (gamma % 2 != 0)
        raise(ErrorKind::unsupported_input,
              "arctan_sqrt expands in powers t^{m+1/2}; lattice 1/" + std::to_string(gamma) +
                  " cannot carry them");
    std::vector<double> c(static_cast<std::size_t>(M) + 1, 0.0);
    for (long m = 0;; ++m) {
        const long l = (2 * m + 1) * (gamma / 2);
        if (l > M)
            break;
        c[static_cast<std::size_t>(l)] = ((m % 2) ? -1.0 : 1.0) / (2.0 * m + 1.0);
    }
    return c;
}

std::vector<double> series_abel14_arctan_sqrt(int M, int gamma) {
    if (gamma % 4 != 0)
        raise(ErrorKind::unsupported_input,
              "abel14_arctan_sqrt expands in powers t^{m+3/4}; lattice 1/" + std::to_string(gamma) +
                  " cannot carry them");
    std::vector<double> c(static_cast<std::size_t>(M) + 1, 0.0);
    for (long m = 0;; ++m) {
        const long l = m * gamma + 3 * (gamma / 4);
        if (l > M)
            break;
        c[static_cast<std::size_t>(l)] =
            (((m % 2) ? -1.0 : 1.0) / (2.0 * m + 1.0)) * beta_fn(0.25, m + 1.5);
    }
    return c;
}

std::vector<double> series_erfc_comb(int M, int gamma) {
    if (gamma % 2 != 0)
        raise(ErrorKind::unsupported_input,
              "erfc_comb expands in powers t^{k/2}; lattice 1/" + std::to_string(gamma) +
                  " cannot carry them");
    std::vector<double> c(static_cast<std::size_t>(M) + 1, 0.0);
    // 1 - e^{pi t} erfc(sqrt(pi t)) = -sum_{k>=1} (-1)^k pi^{k/2} t^{k/2} / Gamma(k/2 + 1)
    for (long k = 1;; ++k) {
        const long l = k * (gamma / 2);
        if (l > M)
            break;
        const double mag = std::exp(0.5 * k * std::log(M_PI) - std::lgamma(0.5 * k + 1.0));
        c[static_cast<std::size_t>(l)] = ((k % 2) ? 1.0 : -1.0) * mag;
    }
    return c;
}

namespace {

void add_kernel(ProblemConfig& cfg, int i, int j, double coeff) {
    cfg.kernels[static_cast<std::size_t>(i - 1) * cfg.n + (j - 1)].push_back({0, 0, coeff});
}

void add_term(ComponentSpec& spec, long l, double coeff) { spec.terms.push_back({l, coeff}); }

ProblemConfig blank(int n) {
    ProblemConfig cfg;
    cfg.n = n;
    cfg.alphas.assign(static_cast<std::size_t>(n) * n, Rational(1, 1));
    cfg.kernels.assign(static_cast<std::size_t>(n) * n, {});
    cfg.forcing.assign(static_cast<std::size_t>(n), {});
    cfg.exact.assign(static_cast<std::size_t>(n), {});
    return cfg;
}

ProblemConfig example1() {
    ProblemConfig cfg = blank(2);
    for (Rational& a : cfg.alphas)
        a = Rational(1, 4);
    const double ig = 1.0 / gamma_fn(0.25);
    add_kernel(cfg, 1, 2, ig);
    add_kernel(cfg, 2, 1, -ig);
    add_kernel(cfg, 2, 2, -ig);

    // forcing derived from the exact solution [t^{5/4}, c t], c = 5 Gamma(1/4)/16
    const double c = 5.0 * gamma_fn(0.25) / 16.0;
    add_term(cfg.forcing[1], 4, c);
    add_term(cfg.forcing[1], 5, 1.0);
    add_term(cfg.forcing[1], 6, gamma_fn(2.25) / gamma_fn(2.5));

    add_term(cfg.exact[0], 5, 1.0);
    add_term(cfg.exact[1], 4, c);
    return cfg;
}

ProblemConfig example2() {
    ProblemConfig cfg = blank(2);
    cfg.alphas = {Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(1, 5)};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            add_kernel(cfg, i, j, 1.0);

    // forcing of the exact solution [t + t^2, t - t^2] on the 1/5 lattice
    add_term(cfg.forcing[0], 5, 1.0);
    add_term(cfg.forcing[0], 8, -beta_fn(0.6, 2.0));
    add_term(cfg.forcing[0], 9, -beta_fn(0.8, 2.0));
    add_term(cfg.forcing[0], 10, 1.0);
    add_term(cfg.forcing[0], 13, beta_fn(0.6, 3.0));
    add_term(cfg.forcing[0], 14, -beta_fn(0.8, 3.0));

    add_term(cfg.forcing[1], 5, 1.0);
    add_term(cfg.forcing[1], 6, -beta_fn(0.2, 2.0));
    add_term(cfg.forcing[1], 7, -beta_fn(0.4, 2.0));
    add_term(cfg.forcing[1], 10, -1.0);
    add_term(cfg.forcing[1], 11, beta_fn(0.2, 3.0));
    add_term(cfg.forcing[1], 12, -beta_fn(0.4, 3.0));

    add_term(cfg.exact[0], 5, 1.0);
    add_term(cfg.exact[0], 10, 1.0);
    add_term(cfg.exact[1], 5, 1.0);
    add_term(cfg.exact[1], 10, -1.0);
    return cfg;
}

ProblemConfig example3() {
    ProblemConfig cfg = blank(2);
    cfg.alphas = {Rational(1, 4), Rational(3, 4), Rational(1, 4), Rational(1, 2)};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            add_kernel(cfg, i, j, 1.0);

    // g_1 = arctan(sqrt t) - int_0^t (t-s)^{-3/4} arctan(sqrt s) ds - Beta(3/4, 7/4) t^{3/2}
    cfg.forcing[0].builtins.push_back({"arctan_sqrt", 1.0});
    cfg.forcing[0].builtins.push_back({"abel14_arctan_sqrt", -1.0});
    add_term(cfg.forcing[0], 6, -beta_fn(0.75, 1.75));

    // g_2 = t^{3/4} - int_0^t (t-s)^{-3/4} arctan(sqrt s) ds - Beta(1/2, 7/4) t^{5/4}
    cfg.forcing[1].builtins.push_back({"abel14_arctan_sqrt", -1.0});
    add_term(cfg.forcing[1], 3, 1.0);
    add_term(cfg.forcing[1], 5, -beta_fn(0.5, 1.75));

    cfg.exact[0].builtins.push_back({"arctan_sqrt", 1.0});
    add_term(cfg.exact[1], 3, 1.0);
    return cfg;
}

ProblemConfig example4() {
    ProblemConfig cfg = blank(2);
    for (Rational& a : cfg.alphas)
        a = Rational(1, 2);
    add_kernel(cfg, 1, 1, -1.0);
    add_kernel(cfg, 1, 2, -1.0);
    add_kernel(cfg, 2, 1, 1.0);

    add_term(cfg.forcing[0], 1, 2.0);
    add_term(cfg.forcing[0], 2, M_PI / 2.0);

    // g_2 = 1 - sqrt t - e^{pi t} erfc(sqrt(pi t)) = erfc_comb - t^{1/2}
    cfg.forcing[1].builtins.push_back({"erfc_comb", 1.0});
    add_term(cfg.forcing[1], 1, -1.0);

    cfg.exact[0].builtins.push_back({"erfc_comb", 1.0});
    add_term(cfg.exact[1], 1, 1.0);
    return cfg;
}

} // namespace

ProblemConfig builtin_example(int k) {
    switch (k) {
    case 1:
        return example1();
    case 2:
        return example2();
    case 3:
        return example3();
    case 4:
        return example4();
    default:
        raise(ErrorKind::config, "built-in example index must be 1..4");
    }
}

} // namespace abeltau
