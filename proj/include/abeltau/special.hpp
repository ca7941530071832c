#ifndef ABELTAU_SPECIAL_HPP
#define ABELTAU_SPECIAL_HPP

#include <cmath>
#include <cstdint>

namespace abeltau {

// Gamma/Beta evaluation goes through std::lgamma so that moderate-degree
// coefficient formulas (n up to ~200) never overflow in intermediates.

/// log |Gamma(x)| together with the sign of Gamma(x); x must not be a
/// non-positive integer.
double log_gamma_signed(double x, int& sign);

/// Gamma(x) for any non-pole x, computed via log_gamma_signed.
double gamma_fn(double x);

/// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0.
double beta_fn(double a, double b);

/// Deterministic 64-bit generator for property-style tests and Monte-Carlo
/// checks (splitmix64; no global state).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace abeltau

#endif
