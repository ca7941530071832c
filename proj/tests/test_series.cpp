#include "support.hpp"

#include "abeltau/config.hpp"
#include "abeltau/examples.hpp"
#include "abeltau/lambda.hpp"
#include "abeltau/series.hpp"

#include <cmath>

using namespace abeltau;

TEST_SUITE("series") {

TEST_CASE("example 2 reproduces the polynomial solution") {
    const Problem p = config_to_problem(builtin_example(2));
    const SeriesSolution sol = series_coeffs(p, 40);

    CHECK(sol.coeffs[0][5] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.coeffs[0][10] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.coeffs[1][5] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.coeffs[1][10] == doctest::Approx(-1.0).epsilon(1e-12));
    double stray = 0.0;
    for (int mu = 0; mu <= 40; ++mu) {
        if (mu != 5 && mu != 10) {
            stray = std::max(stray, std::fabs(sol.coeffs[0][static_cast<std::size_t>(mu)]));
            stray = std::max(stray, std::fabs(sol.coeffs[1][static_cast<std::size_t>(mu)]));
        }
    }
    CHECK(stray <= 1e-12);
}

TEST_CASE("example 1 concentrates on single powers") {
    const Problem p = config_to_problem(builtin_example(1));
    const SeriesSolution sol = series_coeffs(p, 24);
    CHECK(sol.coeffs[0][5] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.coeffs[1][4] == doctest::Approx(5.0 * gamma_fn(0.25) / 16.0).epsilon(1e-12));
    for (int mu = 0; mu <= 24; ++mu) {
        if (mu != 5)
            CHECK(std::fabs(sol.coeffs[0][static_cast<std::size_t>(mu)]) <= 1e-13);
        if (mu != 4)
            CHECK(std::fabs(sol.coeffs[1][static_cast<std::size_t>(mu)]) <= 1e-13);
    }
}

TEST_CASE("zero forcing gives the zero series with unit radius") {
    ProblemConfig cfg = builtin_example(1);
    cfg.forcing[0] = {};
    cfg.forcing[1] = {};
    const Problem p = config_to_problem(cfg);
    const SeriesSolution sol = series_coeffs(p, 30);
    for (const auto& comp : sol.coeffs)
        for (double c : comp)
            CHECK(c == 0.0);
    CHECK(sol.radius == std::vector<double>{1.0, 1.0});
}

TEST_CASE("pre-kick-in coefficients equal the forcing coefficients") {
    // min_l delta_1l = 3 for example 2: indices 0..2 must match bitwise
    const Problem p = config_to_problem(builtin_example(2));
    const SeriesSolution sol = series_coeffs(p, 20);
    const std::vector<double> g1 = p.forcing(0).series(20, 5);
    for (int mu = 0; mu < 3; ++mu)
        CHECK(sol.coeffs[0][static_cast<std::size_t>(mu)] == g1[static_cast<std::size_t>(mu)]);
    const std::vector<double> g2 = p.forcing(1).series(20, 5);
    for (int mu = 0; mu < 1; ++mu) // min_l delta_2l = 1
        CHECK(sol.coeffs[1][static_cast<std::size_t>(mu)] == g2[static_cast<std::size_t>(mu)]);
}

TEST_CASE("radius estimate") {
    const Problem p4 = config_to_problem(builtin_example(4));
    const std::vector<double> eps = radius_estimate(p4);
    for (double e : eps) {
        CHECK(e > 0.0);
        CHECK(e <= 1.0);
    }

    // scaling the forcing leaves the ratio (and the radius) unchanged
    ProblemConfig scaled = builtin_example(2);
    for (ComponentSpec& spec : scaled.forcing)
        for (ForcingTerm& t : spec.terms)
            t.coeff *= 3.7;
    const std::vector<double> base = radius_estimate(config_to_problem(builtin_example(2)));
    const std::vector<double> after = radius_estimate(config_to_problem(scaled));
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(after[i] == doctest::Approx(base[i]).epsilon(1e-12));

    // a vanishing component borrows the largest bound, keeping eps positive
    const std::vector<double> eps1 = radius_estimate(config_to_problem(builtin_example(1)));
    CHECK(eps1[0] > 0.0);
    CHECK(eps1[1] > 0.0);
    CHECK(comparison_window(eps1) == doctest::Approx(0.5 * std::min(eps1[0], eps1[1])));
}

TEST_CASE("series evaluation") {
    const Problem p = config_to_problem(builtin_example(2));
    const SeriesSolution sol = series_coeffs(p, 40);

    const std::vector<double> at0 = sol.eval(0.0);
    CHECK(at0[0] == sol.coeffs[0][0]);
    CHECK(at0[1] == sol.coeffs[1][0]);

    const std::vector<double> at = sol.eval(0.05);
    CHECK(at[0] == doctest::Approx(0.0525).epsilon(1e-12));
    CHECK(at[1] == doctest::Approx(0.0475).epsilon(1e-12));

    const Problem p1 = config_to_problem(builtin_example(1));
    const SeriesSolution s1 = series_coeffs(p1, 20);
    CHECK(s1.eval(0.1)[0] == doctest::Approx(std::pow(0.1, 1.25)).epsilon(1e-12));

    CHECK_THROWS_AS(sol.eval(1.5), Error);
    CHECK_THROWS_AS(sol.eval(-0.1), Error);
}

TEST_CASE("truncated series leaves only a high-order operator defect") {
    // example 4 has a genuinely infinite series; pushing the truncation
    // through L must cancel everything below the truncation tail
    const ProblemConfig cfg = builtin_example(4);
    const Problem p = config_to_problem(cfg);
    const int M = 40;
    const SeriesSolution sol = series_coeffs(p, M);

    FracPolyVec y(p.gamma(), p.n());
    for (int i = 0; i < p.n(); ++i)
        for (int mu = 0; mu <= M; ++mu)
            y[i].set_coeff(static_cast<std::size_t>(mu), sol.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)]);

    const LambdaSet lam = build_lambda_set(p, M + 4);
    FracPolyVec defect = apply_operator(y, p, lam);
    for (int i = 0; i < p.n(); ++i) {
        const std::vector<double> g = p.forcing(i).series(M + 8, p.gamma());
        for (std::size_t l = 0; l < g.size(); ++l)
            defect[i].add_term(l, -g[l]);
    }
    const int kernel_reach = p.max_delta() + 2 * p.max_kernel_degree();
    const double tol = 1e-12 * (1.0 + y.coeff_norm());
    for (int i = 0; i < p.n(); ++i) {
        const long lowest = defect[i].min_index(tol);
        if (lowest >= 0)
            CHECK(lowest > M - kernel_reach);
    }
}

TEST_CASE("series agreement with the analytic erfc expansion") {
    const Problem p = config_to_problem(builtin_example(4));
    const SeriesSolution sol = series_coeffs(p, 60);
    // y_1 = 1 - e^{pi t} erfc(sqrt(pi t)) has the erfc_comb expansion
    const std::vector<double> want = series_erfc_comb(60, 2);
    for (int mu = 0; mu <= 40; ++mu)
        CHECK(std::fabs(sol.coeffs[0][static_cast<std::size_t>(mu)] -
                        want[static_cast<std::size_t>(mu)]) <= 1e-9);
    // y_2 = sqrt t
    CHECK(sol.coeffs[1][1] == doctest::Approx(1.0).epsilon(1e-10));
    for (int mu = 0; mu <= 40; ++mu)
        if (mu != 1)
            CHECK(std::fabs(sol.coeffs[1][static_cast<std::size_t>(mu)]) <= 1e-9);
}

TEST_CASE("forcing without an expansion is rejected") {
    std::vector<Rational> alphas{Rational(1, 2)};
    FracBivar k(2, 0);
    k.set_coeff(0, 0, 1.0);
    Problem p = Problem::build(1, alphas, {k},
                               {Forcing::callable([](double t) { return std::cos(t); })});
    CHECK_THROWS_AS(series_coeffs(p, 20), Error);
}

} // TEST_SUITE
