#include "abeltau/special.hpp"

#include "abeltau/error.hpp"

#include <cmath>

namespace abeltau {

double log_gamma_signed(double x, int& sign) {
    if (x > 0.0) {
        sign = 1;
        return std::lgamma(x);
    }
    if (x == std::floor(x))
        raise(ErrorKind::domain, "Gamma pole at non-positive integer argument");
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const double s = std::sin(M_PI * x);
    sign = (s > 0.0) ? 1 : -1;
    return std::log(M_PI / std::fabs(s)) - std::lgamma(1.0 - x);
}

double gamma_fn(double x) {
    int sign = 1;
    const double lg = log_gamma_signed(x, sign);
    return sign * std::exp(lg);
}

double beta_fn(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        raise(ErrorKind::domain, "Beta requires positive arguments");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

} // namespace abeltau
