#include "abeltau/basis.hpp"

#include "abeltau/error.hpp"
#include "abeltau/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abeltau {

std::vector<double> jacobi_coeffs(int n, const JacobiParams& params) {
    if (n < 0)
        raise(ErrorKind::domain, "jacobi_coeffs requires n >= 0");
    if (n > kJacobiDegreeCap)
        raise(ErrorKind::capacity,
              "jacobi_coeffs degree " + std::to_string(n) + " exceeds cap " +
                  std::to_string(kJacobiDegreeCap));
    if (params.theta <= -1.0 || params.xi <= -1.0)
        raise(ErrorKind::domain, "Jacobi parameters must exceed -1");

    const double th = params.theta, xi = params.xi;
    std::vector<double> z(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        int s1, s2, s3, s4;
        double lg = log_gamma_signed(n + xi + 1.0, s1) + log_gamma_signed(n + th + xi + j + 1.0, s2) -
                    log_gamma_signed(xi + j + 1.0, s3) - log_gamma_signed(n + th + xi + 1.0, s4) -
                    std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
        const int sign = ((n - j) % 2 ? -1 : 1) * s1 * s2 * s3 * s4;
        z[static_cast<std::size_t>(j)] = sign * std::exp(lg);
    }
    return z;
}

std::vector<double> jacobi_eval_all(int n, const JacobiParams& params, double s) {
    // three-term recurrence for P_k^{(a,b)} evaluated at x = 2s - 1
    const double a = params.theta, b = params.xi;
    const double x = 2.0 * s - 1.0;
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    v[0] = 1.0;
    if (n == 0)
        return v;
    v[1] = 0.5 * ((a + b + 2.0) * x + (a - b));
    for (int k = 2; k <= n; ++k) {
        const double s2 = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s2 - 2.0);
        const double c2 = (s2 - 1.0) * (s2 * (s2 - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s2;
        v[static_cast<std::size_t>(k)] =
            (c2 * v[static_cast<std::size_t>(k - 1)] - c3 * v[static_cast<std::size_t>(k - 2)]) / c1;
    }
    return v;
}

double jacobi_norm_sq(int n, const JacobiParams& params) {
    const double th = params.theta, xi = params.xi;
    return std::exp(std::lgamma(n + th + 1.0) + std::lgamma(n + xi + 1.0) -
                    std::lgamma(n + 1.0) - std::lgamma(n + th + xi + 1.0)) /
           (2.0 * n + th + xi + 1.0);
}

MuntzBasis::MuntzBasis(int gamma, int max_index) : gamma_(gamma) {
    if (gamma < 1)
        raise(ErrorKind::domain, "MuntzBasis requires gamma >= 1");
    if (max_index < 0)
        raise(ErrorKind::domain, "MuntzBasis requires a nonnegative max index");
    if (max_index > kJacobiDegreeCap)
        raise(ErrorKind::capacity, "MuntzBasis index beyond degree cap");

    const double inv_sigma = static_cast<double>(gamma);
    const double sigma = 1.0 / inv_sigma;

    polys_.reserve(static_cast<std::size_t>(max_index) + 1);
    polys_.push_back(FracPoly(gamma, {1.0}));
    if (max_index >= 1)
        // L_1 = (t^sigma (1 + sigma) - 1) / sigma
        polys_.push_back(FracPoly(gamma, {-inv_sigma, (1.0 + sigma) * inv_sigma}));

    for (int i = 1; i < max_index; ++i) {
        const double d1 = 2.0 * (i + 1.0) * (i + inv_sigma) * (2.0 * i + inv_sigma - 1.0);
        const double d3 = 2.0 * i * (i + inv_sigma - 1.0) * (2.0 * i + inv_sigma + 1.0);
        const double c = 2.0 * i + inv_sigma;
        const double cx = c * (2.0 * i + inv_sigma - 1.0) * (2.0 * i + inv_sigma + 1.0);
        const double c0 = c * (inv_sigma - 1.0) * (inv_sigma - 1.0);

        // d2(t) L_i with the recurrence variable 2 t^sigma - 1:
        //   cx * (2 shift(L_i) - L_i) - c0 * L_i
        const FracPoly& li = polys_[static_cast<std::size_t>(i)];
        FracPoly mid = li.shift(1).scaled(2.0 * cx).axpy(-(cx + c0), li);
        FracPoly next = mid.axpy(-d3, polys_[static_cast<std::size_t>(i - 1)]).scaled(1.0 / d1);
        polys_.push_back(std::move(next));
    }

    norms_.reserve(polys_.size());
    for (int i = 0; i <= max_index; ++i)
        norms_.push_back(muntz_norm_sq(i, gamma));
}

FracPoly MuntzBasis::orthonormal(int j) const {
    if (j < 0 || j > max_index())
        raise(ErrorKind::domain, "orthonormal index outside built basis");
    return polys_[static_cast<std::size_t>(j)].scaled(1.0 / std::sqrt(norms_[static_cast<std::size_t>(j)]));
}

double muntz_norm_sq(int i, int gamma) {
    if (i < 0)
        raise(ErrorKind::domain, "muntz_norm_sq requires i >= 0");
    JacobiParams p{0.0, static_cast<double>(gamma) - 1.0};
    return static_cast<double>(gamma) * jacobi_norm_sq(i, p);
}

double fracpoly_inner(const FracPoly& p, const FracPoly& q) {
    if (p.gamma() != q.gamma())
        raise(ErrorKind::incompatible_sigma, "inner product on mismatched lattices");
    const double sigma = p.sigma();
    double acc = 0.0;
    const long mp = p.max_index(), mq = q.max_index();
    for (long a = 0; a <= mp; ++a) {
        if (p.coeff(static_cast<std::size_t>(a)) == 0.0)
            continue;
        for (long b = 0; b <= mq; ++b) {
            const double cb = q.coeff(static_cast<std::size_t>(b));
            if (cb == 0.0)
                continue;
            acc += p.coeff(static_cast<std::size_t>(a)) * cb / ((a + b) * sigma + 1.0);
        }
    }
    return acc;
}

std::vector<double> muntz_expand(const FracPoly& f, const MuntzBasis& basis, int M) {
    if (f.gamma() != basis.gamma())
        raise(ErrorKind::incompatible_sigma, "muntz_expand on mismatched lattices");
    if (M > basis.max_index())
        raise(ErrorKind::capacity, "muntz_expand beyond built basis");
    std::vector<double> u(static_cast<std::size_t>(M) + 1, 0.0);
    for (int i = 0; i <= M; ++i)
        u[static_cast<std::size_t>(i)] = fracpoly_inner(f, basis.poly(i)) / basis.norm_sq(i);
    return u;
}

FracPoly project(const FracPoly& f, int N) {
    if (N < 0)
        raise(ErrorKind::domain, "project requires N >= 0");
    if (f.max_index(0.0) <= N)
        return f; // already inside the space
    // Truncating the Muntz expansion through the quadrature route keeps the
    // coefficients stable; exact monomial cross moments lose digits fast as
    // the index grows.
    const int nodes = std::max(static_cast<int>(f.max_index(0.0)) + 16, 64);
    return project([&f](double t) { return f.eval(t); }, N, f.gamma(), nodes);
}

namespace {

// Muntz coefficients of a callable by Gauss-Jacobi quadrature in x = t^sigma:
//   <f, L_i> = (1/sigma) int_0^1 f(x^gamma) J_i(x) x^{1/sigma - 1} dx.
std::vector<double> quadrature_muntz_coeffs(const std::function<double(double)>& f, int N,
                                            int gamma, int nodes) {
    const JacobiParams jp{0.0, static_cast<double>(gamma) - 1.0};
    const JacobiRule rule = gauss_jacobi(nodes, jp.theta, jp.xi);
    std::vector<double> acc(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = rule.nodes[k];
        const double fx = f(std::pow(x, static_cast<double>(gamma)));
        const std::vector<double> jv = jacobi_eval_all(N, jp, x);
        for (int i = 0; i <= N; ++i)
            acc[static_cast<std::size_t>(i)] += rule.weights[k] * fx * jv[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= N; ++i)
        acc[static_cast<std::size_t>(i)] /= jacobi_norm_sq(i, jp);
    return acc;
}

} // namespace

FracPoly project(const std::function<double(double)>& f, int N, int gamma, int quad_nodes) {
    if (N < 0)
        raise(ErrorKind::domain, "project requires N >= 0");
    const int nodes = quad_nodes > 0 ? quad_nodes : std::max(N + 16, 64);

    const std::vector<double> u = quadrature_muntz_coeffs(f, N, gamma, nodes);
    const std::vector<double> u_fine = quadrature_muntz_coeffs(f, N, gamma, nodes + 24);

    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        diff = std::max(diff, std::fabs(u[i] - u_fine[i]));
        scale = std::max(scale, std::fabs(u_fine[i]));
    }
    if (diff > 1e-9 * (1.0 + scale))
        raise(ErrorKind::quadrature,
              "projection quadrature did not converge (coefficient drift " + std::to_string(diff) +
                  " at " + std::to_string(nodes) + " nodes); integrand may lack smoothness in t^(1/" +
                  std::to_string(gamma) + ")");

    MuntzBasis basis(gamma, N);
    FracPoly out(gamma);
    for (int i = 0; i <= N; ++i)
        out = out.axpy(u_fine[static_cast<std::size_t>(i)], basis.poly(i));
    return out;
}

FracBivar project_kernel(const std::function<double(double, double)>& k, int max_pq, int gamma,
                         int quad_nodes) {
    const int nodes = quad_nodes > 0 ? quad_nodes : std::max(max_pq + 16, 48);
    const JacobiParams jp{0.0, static_cast<double>(gamma) - 1.0};
    const JacobiRule rule = gauss_jacobi(nodes, jp.theta, jp.xi);
    MuntzBasis basis(gamma, max_pq);

    // pass 1: for each t-node, expand s -> k(t, s); pass 2: expand each
    // s-coefficient as a function of t
    const std::size_t m = rule.nodes.size();
    std::vector<std::vector<double>> s_coeffs(m);
    for (std::size_t a = 0; a < m; ++a) {
        const double t = std::pow(rule.nodes[a], static_cast<double>(gamma));
        const FracPoly slice =
            project([&](double s) { return k(t, s); }, max_pq, gamma, nodes);
        s_coeffs[a].assign(static_cast<std::size_t>(max_pq) + 1, 0.0);
        for (int q = 0; q <= max_pq; ++q)
            s_coeffs[a][static_cast<std::size_t>(q)] = slice.coeff(static_cast<std::size_t>(q));
    }

    FracBivar out(gamma, max_pq);
    for (int q = 0; q <= max_pq; ++q) {
        std::vector<double> acc(static_cast<std::size_t>(max_pq) + 1, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
            const std::vector<double> jv = jacobi_eval_all(max_pq, jp, rule.nodes[a]);
            for (int i = 0; i <= max_pq; ++i)
                acc[static_cast<std::size_t>(i)] +=
                    rule.weights[a] * s_coeffs[a][static_cast<std::size_t>(q)] * jv[static_cast<std::size_t>(i)];
        }
        FracPoly tpoly(gamma);
        for (int i = 0; i <= max_pq; ++i)
            tpoly = tpoly.axpy(acc[static_cast<std::size_t>(i)] / jacobi_norm_sq(i, jp), basis.poly(i));
        for (int p = 0; p <= max_pq; ++p)
            out.set_coeff(p, q, tpoly.coeff(static_cast<std::size_t>(p)));
    }
    return out;
}

} // namespace abeltau
