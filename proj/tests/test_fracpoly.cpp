#include "support.hpp"

#include "abeltau/fracpoly.hpp"

using namespace abeltau;

TEST_SUITE("fracpoly") {

TEST_CASE("eval") {
    FracPoly p(4, {1.0, 1.0}); // 1 + t^{1/4}
    CHECK(p.eval(1.0) == doctest::Approx(2.0).epsilon(1e-15));

    FracPoly q = FracPoly::monomial(4, 5); // t^{5/4}
    CHECK(q.eval(0.5) == doctest::Approx(std::pow(0.5, 1.25)).epsilon(1e-14));

    FracPoly z(4);
    CHECK(z.eval(0.3) == 0.0);
    CHECK(z.eval(0.0) == 0.0);

    CHECK(p.eval(0.0) == 1.0); // 0^0 convention picks the constant term
    CHECK_THROWS_AS(p.eval(-0.1), Error);
}

TEST_CASE("axpy") {
    FracPoly ts = FracPoly::monomial(2, 1);
    CHECK(ts.axpy(1.0, ts.scaled(-1.0)).is_zero());

    FracPoly one(3, {1.0});
    CHECK(coeffs_close(one.axpy(2.0, one), {3.0}, 0.0));

    // disjoint support union: 0.5 t^{2s} + t^s
    FracPoly a = FracPoly::monomial(5, 2);
    FracPoly b = FracPoly::monomial(5, 1);
    CHECK(coeffs_close(b.axpy(0.5, a), {0.0, 1.0, 0.5}, 0.0));

    CHECK_THROWS_AS(FracPoly(2).axpy(1.0, FracPoly(3)), Error);
}

TEST_CASE("shift") {
    CHECK(coeffs_close(FracPoly(4, {1.0}).shift(3), {0.0, 0.0, 0.0, 1.0}, 0.0));
    FracPoly ts = FracPoly::monomial(4, 1);
    CHECK(approx_equal(ts.shift(0), ts, 0.0));
    CHECK(coeffs_close(FracPoly(4, {1.0, 1.0}).shift(2), {0.0, 0.0, 1.0, 1.0}, 0.0));
}

TEST_CASE("shift evaluation identity") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const int gamma = 1 + static_cast<int>(rng.below(6));
        FracPoly p(gamma);
        const int deg = static_cast<int>(rng.below(9));
        for (int l = 0; l <= deg; ++l)
            p.set_coeff(static_cast<std::size_t>(l), rng.uniform(-2.0, 2.0));
        const std::size_t k = rng.below(5);
        const double t = rng.uniform(1e-3, 1.0);
        const double lhs = p.shift(k).eval(t);
        const double rhs = std::pow(t, static_cast<double>(k) / gamma) * p.eval(t);
        CHECK(std::fabs(lhs - rhs) <= 1e-13 * (1.0 + std::fabs(rhs)));
    }
}

TEST_CASE("coefficient map round-trip and equality") {
    FracPoly p(4);
    p.set_coeff(7, -0.25);
    p.set_coeff(2, 3.5);
    CHECK(p.coeff(7) == -0.25);
    CHECK(p.coeff(2) == 3.5);
    CHECK(p.coeff(11) == 0.0);
    CHECK(p.max_index() == 7);
    CHECK(p.min_index() == 2);

    // trailing zeros are representation detail, not identity
    FracPoly q = p;
    q.set_coeff(12, 0.0);
    CHECK(approx_equal(p, q, 0.0));

    FracPoly r = p;
    r.set_coeff(2, 3.5 + 5e-13);
    CHECK(approx_equal(p, r));          // default 1e-12 tolerance
    CHECK(!approx_equal(p, r, 1e-14));
}

TEST_CASE("axpy additive laws on representable values") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        FracPoly a(3), b(3), c(3);
        for (int l = 0; l < 6; ++l) {
            // dyadic rationals are exact in binary floating point
            a.set_coeff(static_cast<std::size_t>(l), static_cast<double>(rng.below(33)) / 16.0 - 1.0);
            b.set_coeff(static_cast<std::size_t>(l), static_cast<double>(rng.below(33)) / 16.0 - 1.0);
            c.set_coeff(static_cast<std::size_t>(l), static_cast<double>(rng.below(33)) / 16.0 - 1.0);
        }
        CHECK(approx_equal(a.axpy(1.0, b), b.axpy(1.0, a), 0.0));
        CHECK(approx_equal(a.axpy(1.0, b).axpy(1.0, c), a.axpy(1.0, b.axpy(1.0, c)), 0.0));
    }
}

TEST_CASE("vector operations") {
    FracPolyVec v(4, 2);
    v[0] = FracPoly::monomial(4, 2, 3.0);
    v[1] = FracPoly::monomial(4, 0, -1.0);
    CHECK(v.coeff_norm() == 3.0);
    CHECK(v.max_index() == 2);
    const std::vector<double> at = v.eval(0.5);
    CHECK(at[0] == doctest::Approx(3.0 * std::sqrt(0.5)).epsilon(1e-14));
    CHECK(at[1] == -1.0);

    FracPolyVec w = v.axpy(-3.0, v.scaled(1.0 / 3.0));
    CHECK(w.coeff_norm() == 0.0);
}

TEST_CASE("bivariate grid") {
    FracBivar k(2, 1);
    k.set_coeff(0, 0, 1.0);
    k.set_coeff(1, 1, -2.0);
    CHECK(k.coeff(1, 1) == -2.0);
    CHECK(k.coeff(2, 0) == 0.0);
    CHECK(k.abs_coeff_sum() == 3.0);
    CHECK(k.eval(0.25, 1.0) == doctest::Approx(1.0 - 2.0 * 0.5).epsilon(1e-14));
    CHECK_THROWS_AS(k.set_coeff(2, 0, 1.0), Error);

    FracBivar zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
}

} // TEST_SUITE
