#include "support.hpp"

#include "abeltau/config.hpp"
#include "abeltau/examples.hpp"
#include "abeltau/lambda.hpp"
#include "abeltau/quadrature.hpp"

#include <cmath>

using namespace abeltau;

TEST_SUITE("lambda") {

TEST_CASE("ktilde against beta moments") {
    const double ig = 1.0 / gamma_fn(0.25);
    FracBivar k(4, 0);
    k.set_coeff(0, 0, ig);

    CHECK(ktilde(k, 1, 0, 0) == doctest::Approx(4.0 * ig).epsilon(1e-14));
    CHECK(ktilde(k, 1, 0, 1) == doctest::Approx(beta_fn(0.25, 1.25) * ig).epsilon(1e-14));
    CHECK(ktilde(k, 1, 1, 0) == 0.0); // no p + q = 1 terms in a constant kernel
    CHECK_THROWS_AS(ktilde(k, 1, -1, 0), Error);
}

TEST_CASE("lambda matrix band layout") {
    const double ig = 1.0 / gamma_fn(0.25);
    FracBivar k(4, 0);
    k.set_coeff(0, 0, ig);
    const LambdaMatrix m(k, 1, 8, 12);

    // first row: delta zeros then ktilde_{0,0} = 4/Gamma(1/4)
    CHECK(m.entry(1, 1) == 0.0);
    CHECK(m.entry(1, 2) == doctest::Approx(4.0 * ig).epsilon(1e-14));
    for (int c = 3; c <= 12; ++c)
        CHECK(m.entry(1, c) == 0.0);
    CHECK(m.entry(2, 3) == doctest::Approx(beta_fn(0.25, 1.25) * ig).epsilon(1e-14));
    CHECK(m.band_height() == 1);

    const LambdaMatrix zero(FracBivar(), 1, 6, 8);
    CHECK(zero.band_height() == 0);
    for (int r = 1; r <= 6; ++r)
        for (int c = 1; c <= 8; ++c)
            CHECK(zero.entry(r, c) == 0.0);
}

TEST_CASE("band structure of random kernels") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int gamma = 2 + static_cast<int>(rng.below(4));
        const int nk = static_cast<int>(rng.below(3));
        const int delta = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(gamma)));
        FracBivar k(gamma, nk);
        for (int p = 0; p <= nk; ++p)
            for (int q = 0; q <= nk; ++q)
                k.set_coeff(p, q, rng.uniform(-1.0, 1.0));
        const LambdaMatrix m(k, delta, 10, 10 + delta + 2 * nk + 1);
        for (int r = 1; r <= m.rows(); ++r)
            for (int c = 1; c <= m.cols(); ++c)
                if (m.entry(r, c) != 0.0) {
                    CHECK(c - r >= delta);
                    CHECK(c - r <= delta + 2 * nk);
                }
    }
}

TEST_CASE("row action equals singular quadrature") {
    // example-1 kernel pair (1,2): (t-s)^{-3/4} / Gamma(1/4)
    const Problem p = config_to_problem(builtin_example(1));
    const LambdaSet lam = build_lambda_set(p, 12);
    SplitMix64 rng(2024);
    for (int r = 1; r <= 6; ++r) {
        for (int rep = 0; rep < 10; ++rep) {
            const double t = rng.uniform(0.05, 1.0);
            double coeff_space = 0.0;
            for (int c = 1; c <= lam.cols; ++c)
                coeff_space += lam.lambda(0, 1).entry(r, c) * std::pow(t, (c - 1) / 4.0);
            const double quad = std::pow(t, 0.25 + (r - 1) / 4.0) / gamma_fn(0.25) *
                                tanh_sinh([&](double u, double umc) {
                                    return std::pow(umc, -0.75) * std::pow(u, (r - 1) / 4.0);
                                });
            CHECK(std::fabs(coeff_space - quad) <= 1e-8 * std::fabs(quad));
        }
    }
}

TEST_CASE("row action with a bivariate kernel") {
    // k(t,s) = 1 - t^{1/2} s^{1/2} under (t-s)^{-1/2}
    FracBivar k(2, 1);
    k.set_coeff(0, 0, 1.0);
    k.set_coeff(1, 1, -1.0);
    const LambdaMatrix m(k, 1, 6, 12);
    for (int r : {1, 3, 5}) {
        for (double t : {0.3, 0.8}) {
            double coeff_space = 0.0;
            for (int c = 1; c <= m.cols(); ++c)
                coeff_space += m.entry(r, c) * std::pow(t, (c - 1) / 2.0);
            const double quad =
                std::pow(t, 0.5 + (r - 1) / 2.0) *
                tanh_sinh([&](double u, double umc) {
                    return std::pow(umc, -0.5) * (1.0 - std::sqrt(t) * std::sqrt(t * u)) *
                           std::pow(u, (r - 1) / 2.0);
                });
            CHECK(std::fabs(coeff_space - quad) <= 1e-9 * (1.0 + std::fabs(quad)));
        }
    }
}

TEST_CASE("heights and offsets fixtures") {
    const LambdaSet lam1 = build_lambda_set(config_to_problem(builtin_example(1)), 8);
    CHECK(lam1.pair_height(0, 0) == 0);
    CHECK(lam1.pair_height(0, 1) == 1);
    CHECK(lam1.pair_height(1, 0) == 1);
    CHECK(lam1.pair_height(1, 1) == 1);
    CHECK(lam1.heights == std::vector<int>{1, 1});
    CHECK(lam1.offsets == std::vector<int>{0, 0});

    const LambdaSet lam3 = build_lambda_set(config_to_problem(builtin_example(3)), 8);
    CHECK(lam3.pair_height(0, 0) == 1);
    CHECK(lam3.pair_height(0, 1) == 3);
    CHECK(lam3.pair_height(1, 0) == 1);
    CHECK(lam3.pair_height(1, 1) == 2);
    CHECK(lam3.heights == std::vector<int>{3, 2});
    CHECK(lam3.offsets == std::vector<int>{1, 0});

    const LambdaSet lam4 = build_lambda_set(config_to_problem(builtin_example(4)), 8);
    CHECK(lam4.pair_height(1, 1) == 0); // vanishing kernel
    CHECK(lam4.heights == std::vector<int>{1, 1});
    CHECK(lam4.offsets == std::vector<int>{0, 0});

    // Delta_j nonnegative and attained
    for (const LambdaSet* lam : {&lam1, &lam3, &lam4})
        for (int j = 0; j < lam->n; ++j) {
            CHECK(lam->offsets[static_cast<std::size_t>(j)] >= 0);
            bool attained = false;
            for (int i = 0; i < lam->n; ++i)
                attained = attained || (lam->heights[static_cast<std::size_t>(i)] - lam->pair_height(i, j) ==
                                        lam->offsets[static_cast<std::size_t>(j)]);
            CHECK(attained);
        }
}

TEST_CASE("apply_operator basics") {
    const Problem p = config_to_problem(builtin_example(1));
    const LambdaSet lam = build_lambda_set(p, 12);

    CHECK(apply_operator(FracPolyVec(4, 2), p, lam).coeff_norm() == 0.0);

    // column structure: L(t^{r sigma} e_1) keeps component 1 untouched
    // (Lambda_11 = 0) and maps component 2 through row r+1 of Lambda_21
    for (int r : {0, 2, 5}) {
        FracPolyVec y(4, 2);
        y[0] = FracPoly::monomial(4, static_cast<std::size_t>(r));
        const FracPolyVec out = apply_operator(y, p, lam);
        CHECK(approx_equal(out[0], y[0], 1e-15));
        for (int c = 1; c <= lam.cols; ++c) {
            const double want = -lam.lambda(1, 0).entry(r + 1, c);
            CHECK(out[1].coeff(static_cast<std::size_t>(c - 1)) == doctest::Approx(want).epsilon(1e-14));
        }
    }
}

TEST_CASE("apply_operator maps the example-2 solution to its forcing") {
    const ProblemConfig cfg = builtin_example(2);
    const Problem p = config_to_problem(cfg);
    const LambdaSet lam = build_lambda_set(p, 16);

    FracPolyVec y(5, 2);
    y[0].set_coeff(5, 1.0);
    y[0].set_coeff(10, 1.0);
    y[1].set_coeff(5, 1.0);
    y[1].set_coeff(10, -1.0);

    const FracPolyVec g = apply_operator(y, p, lam);
    for (int i = 0; i < 2; ++i) {
        FracPoly want(5);
        for (const ForcingTerm& term : cfg.forcing[static_cast<std::size_t>(i)].terms)
            want.add_term(static_cast<std::size_t>(term.l), term.coeff);
        CHECK(approx_equal(g[i], want, 1e-10));
    }
}

TEST_CASE("apply_operator is linear") {
    const Problem p = config_to_problem(builtin_example(3));
    const LambdaSet lam = build_lambda_set(p, 14);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        FracPolyVec a(4, 2), b(4, 2);
        for (int i = 0; i < 2; ++i)
            for (int l = 0; l < 8; ++l) {
                a[i].set_coeff(static_cast<std::size_t>(l), rng.uniform(-1.0, 1.0));
                b[i].set_coeff(static_cast<std::size_t>(l), rng.uniform(-1.0, 1.0));
            }
        const double s = rng.uniform(-2.0, 2.0);
        const FracPolyVec lhs = apply_operator(a.scaled(s).axpy(1.0, b), p, lam);
        const FracPolyVec rhs = apply_operator(a, p, lam).scaled(s).axpy(1.0, apply_operator(b, p, lam));
        CHECK(approx_equal(lhs, rhs, 1e-12));
    }
}

TEST_CASE("apply_operator truncation guard") {
    const Problem p = config_to_problem(builtin_example(1));
    const LambdaSet lam = build_lambda_set(p, 6);
    FracPolyVec y(4, 2);
    y[0] = FracPoly::monomial(4, 10);
    CHECK_THROWS_AS(apply_operator(y, p, lam), Error);
}

} // TEST_SUITE
