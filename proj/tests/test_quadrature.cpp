#include "support.hpp"

#include "abeltau/quadrature.hpp"
#include "abeltau/special.hpp"

#include <cmath>

using namespace abeltau;

TEST_SUITE("quadrature") {

TEST_CASE("gauss-jacobi integrates weighted monomials exactly") {
    // int_0^1 (1-u)^a u^b u^k du = Beta(b + k + 1, a + 1)
    struct Params { double a, b; };
    for (const Params prm : {Params{0.0, 3.0}, Params{-0.75, 0.5}, Params{0.0, 0.0}, Params{-0.5, -0.25}}) {
        const JacobiRule rule = gauss_jacobi(12, prm.a, prm.b);
        for (int k = 0; k <= 2 * 12 - 1; ++k) {
            const double got = rule.integrate([&](double u) { return std::pow(u, k); });
            const double want = beta_fn(prm.b + k + 1.0, prm.a + 1.0);
            CHECK(std::fabs(got - want) <= 1e-13 * want);
        }
    }
}

TEST_CASE("gauss-jacobi node layout") {
    const JacobiRule rule = gauss_jacobi(20, -0.75, 0.5);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        CHECK(rule.nodes[k] > 0.0);
        CHECK(rule.nodes[k] < 1.0);
        CHECK(rule.weights[k] > 0.0);
        if (k > 0)
            CHECK(rule.nodes[k] > rule.nodes[k - 1]);
    }
    CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), Error);
}

TEST_CASE("tanh-sinh endpoint singularities") {
    const double v1 = tanh_sinh([](double, double umc) { return std::pow(umc, -0.75); });
    CHECK(v1 == doctest::Approx(4.0).epsilon(1e-12));

    const double v2 = tanh_sinh([](double u, double umc) { return std::pow(u, -0.5) * std::pow(umc, -0.25); });
    CHECK(v2 == doctest::Approx(beta_fn(0.5, 0.75)).epsilon(1e-12));

    const double v3 = tanh_sinh([](double u, double) { return std::exp(u); });
    CHECK(v3 == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

    // strongest exponent in scope: (1-u)^{-4/5}
    const double v4 = tanh_sinh([](double, double umc) { return std::pow(umc, -0.8); });
    CHECK(v4 == doctest::Approx(5.0).epsilon(1e-11));
}

TEST_CASE("gauss-jacobi and tanh-sinh agree on a non-polynomial") {
    const JacobiRule rule = gauss_jacobi(40, -0.5, 0.0);
    const double gj = rule.integrate([](double u) { return std::exp(u); });
    const double ts = tanh_sinh([](double u, double umc) { return std::exp(u) / std::sqrt(umc); });
    CHECK(gj == doctest::Approx(ts).epsilon(1e-12));
}

} // TEST_SUITE
