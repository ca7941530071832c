#include "abeltau/tau.hpp"

#include "abeltau/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abeltau {

double TauSolution::max_tau() const {
    double m = 0.0;
    for (const std::vector<double>& per_i : taus)
        for (double t : per_i)
            m = std::max(m, std::fabs(t));
    return m;
}

std::vector<FracPoly> expand_forcing(const Problem& problem, int N, std::vector<double>* dropped) {
    std::vector<FracPoly> g;
    g.reserve(static_cast<std::size_t>(problem.n()));
    if (dropped)
        dropped->assign(static_cast<std::size_t>(problem.n()), 0.0);

    for (int i = 0; i < problem.n(); ++i) {
        const Forcing& f = problem.forcing(i);
        if (f.is_zero()) {
            g.push_back(FracPoly(problem.gamma()));
            continue;
        }
        if (f.has_exact()) {
            const FracPoly& p = f.exact_poly();
            if (p.gamma() != problem.gamma())
                raise(ErrorKind::incompatible_sigma, "forcing lattice differs from problem lattice");
            FracPoly proj = project(p, N);
            if (dropped && p.max_index(0.0) > N) {
                // quadrature in x = t^sigma: pointwise evaluation stays stable
                // where exact cross moments of the tail would cancel away
                const int gamma = problem.gamma();
                const JacobiRule rule =
                    gauss_jacobi(static_cast<int>(p.max_index(0.0)) + 16, 0.0, gamma - 1.0);
                double mass = 0.0;
                for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                    const double t = std::pow(rule.nodes[k], static_cast<double>(gamma));
                    const double d = p.eval(t) - proj.eval(t);
                    mass += rule.weights[k] * d * d;
                }
                (*dropped)[static_cast<std::size_t>(i)] = std::sqrt(gamma * mass);
            }
            g.push_back(std::move(proj));
        } else {
            g.push_back(project([&f](double t) { return f.eval(t); }, N, problem.gamma()));
        }
    }
    return g;
}

namespace {

// residual-space layout: (component v, index l in S_v), l fastest
struct ResidualSpace {
    std::vector<std::pair<int, int>> slots;

    explicit ResidualSpace(const std::vector<int>& heights) {
        for (int v = 0; v < static_cast<int>(heights.size()); ++v)
            for (int l = 0; l < heights[static_cast<std::size_t>(v)]; ++l)
                slots.emplace_back(v, l);
    }

    int dim() const { return static_cast<int>(slots.size()); }

    // coordinates of a residual-space member; raises if mass leaks outside
    std::vector<double> coords(const FracPolyVec& r, const std::vector<int>& heights) const {
        const double leak_tol = 1e-11 * (1.0 + r.coeff_norm());
        for (int v = 0; v < r.size(); ++v) {
            const long top = r[v].max_index(leak_tol);
            if (top >= heights[static_cast<std::size_t>(v)])
                raise(ErrorKind::internal,
                      "residual escaped the residual space (component " + std::to_string(v + 1) +
                          ", index " + std::to_string(top) + ")");
        }
        std::vector<double> x(slots.size(), 0.0);
        for (std::size_t k = 0; k < slots.size(); ++k)
            x[k] = r[slots[k].first].coeff(static_cast<std::size_t>(slots[k].second));
        return x;
    }
};

// Gaussian elimination with partial pivoting after row/column equilibration.
// Columns of the tau matrix span many orders of magnitude (high-index
// orthonormal coefficients are large), so the singularity test must act on
// the equilibrated matrix.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    if (n == 0)
        return {};
    auto at = [&](int r, int c) -> double& { return m[static_cast<std::size_t>(r) * n + c]; };

    std::vector<double> col_scale(static_cast<std::size_t>(n), 0.0);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r)
            col_scale[static_cast<std::size_t>(c)] = std::max(col_scale[static_cast<std::size_t>(c)], std::fabs(at(r, c)));
        if (col_scale[static_cast<std::size_t>(c)] == 0.0)
            raise(ErrorKind::ill_posed_system, "tau system matrix has a zero column");
        for (int r = 0; r < n; ++r)
            at(r, c) /= col_scale[static_cast<std::size_t>(c)];
    }
    for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int c = 0; c < n; ++c)
            s = std::max(s, std::fabs(at(r, c)));
        if (s == 0.0)
            raise(ErrorKind::ill_posed_system, "tau system matrix has a zero row");
        for (int c = 0; c < n; ++c)
            at(r, c) /= s;
        b[static_cast<std::size_t>(r)] /= s;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        perm[static_cast<std::size_t>(r)] = r;

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(at(r, col)) > std::fabs(at(piv, col)))
                piv = r;
        // genuinely solvable tau systems run pivots down to ~1e-13 after
        // equilibration; entries carry ~1e-16 relative noise, so only pivots
        // below 1e-14 signal true rank deficiency
        if (std::fabs(at(piv, col)) <= 1e-14)
            raise(ErrorKind::ill_posed_system, "tau system matrix is singular within pivot tolerance");
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(at(piv, c), at(col, c));
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = at(r, col) / at(col, col);
            if (f == 0.0)
                continue;
            at(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c)
                at(r, c) -= f * at(col, c);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }

    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c)
            acc -= at(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = acc / at(r, r);
    }
    for (int c = 0; c < n; ++c)
        x[static_cast<std::size_t>(c)] /= col_scale[static_cast<std::size_t>(c)];
    return x;
}

} // namespace

TauSystem assemble_tau_system(const CanonicalTable& table, const MuntzBasis& basis,
                              const std::vector<FracPoly>& g, int N) {
    const int n = table.n();
    const std::vector<int>& h = table.heights();
    const ResidualSpace space(h);

    TauSystem sys;
    sys.dim = space.dim();
    for (int i = 0; i < n; ++i)
        for (int j = N + 1; j <= N + h[static_cast<std::size_t>(i)]; ++j)
            sys.unknowns.emplace_back(i, j);
    if (static_cast<int>(sys.unknowns.size()) != sys.dim)
        raise(ErrorKind::internal, "tau unknown count differs from residual-space dimension");

    sys.m.assign(static_cast<std::size_t>(sys.dim) * sys.dim, 0.0);
    for (int col = 0; col < sys.dim; ++col) {
        const auto [i, j] = sys.unknowns[static_cast<std::size_t>(col)];
        const FracPoly pj = basis.orthonormal(j);
        FracPolyVec comb(table.gamma(), n);
        for (int l = 0; l <= j; ++l) {
            const double c = pj.coeff(static_cast<std::size_t>(l));
            if (c != 0.0)
                comb = comb.axpy(c, table.r(i, l));
        }
        const std::vector<double> x = space.coords(comb, h);
        for (int row = 0; row < sys.dim; ++row)
            sys.m[static_cast<std::size_t>(row) * sys.dim + col] = x[static_cast<std::size_t>(row)];
    }

    FracPolyVec gcomb(table.gamma(), n);
    for (int i = 0; i < n; ++i) {
        const long top = g[static_cast<std::size_t>(i)].max_index();
        for (long l = 0; l <= top && l <= N; ++l) {
            const double c = g[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(l));
            if (c != 0.0)
                gcomb = gcomb.axpy(c, table.r(i, static_cast<int>(l)));
        }
    }
    std::vector<double> bx = space.coords(gcomb, h);
    sys.b.resize(bx.size());
    for (std::size_t k = 0; k < bx.size(); ++k)
        sys.b[k] = -bx[k];
    return sys;
}

TauSolver::TauSolver(Problem problem) : problem_(std::move(problem)) {
    lam_ = build_lambda_set(problem_, lambda_rows_for(problem_, 0));
    table_ = CanonicalTable(problem_, lam_);
}

void TauSolver::prepare(int N) {
    if (N <= prepared_N_)
        return;
    const int rows = lambda_rows_for(problem_, N);
    if (rows > lam_.rows)
        lam_ = build_lambda_set(problem_, rows); // entries are formula-determined, so the
                                                 // table built on the smaller truncation stays valid
    const int up_to = N + lam_.max_height();
    table_.generate(up_to, lam_);
    if (basis_.max_index() < up_to)
        basis_ = MuntzBasis(problem_.gamma(), up_to);
    prepared_N_ = N;
}

TauSolution TauSolver::solve(int N) {
    prepare(N);
    return solve_prepared(N);
}

TauSolution TauSolver::solve_prepared(int N) const {
    const int hmax = lam_.max_height();
    if (N < hmax)
        raise(ErrorKind::domain, "solve requires N >= max height (" + std::to_string(hmax) + ")");
    if (prepared_N_ < N)
        raise(ErrorKind::internal, "solve_prepared called before prepare");

    const int n = problem_.n();
    const std::vector<int>& h = table_.heights();

    TauSolution sol;
    sol.N = N;
    const std::vector<FracPoly> g = expand_forcing(problem_, N, &sol.dropped_forcing);

    const TauSystem sys = assemble_tau_system(table_, basis_, g, N);
    const std::vector<double> tau = solve_dense(sys.m, sys.b);

    sol.taus.assign(static_cast<std::size_t>(n), {});
    {
        std::size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = N + 1; j <= N + h[static_cast<std::size_t>(i)]; ++j)
                sol.taus[static_cast<std::size_t>(i)].push_back(tau[k++]);
    }
    sol.tau_norms.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (double t : sol.taus[static_cast<std::size_t>(i)])
            sol.tau_norms[static_cast<std::size_t>(i)] =
                std::max(sol.tau_norms[static_cast<std::size_t>(i)], std::fabs(t));

    // Y_N = sum_i sum_l g_{l,i} Q_i^l + sum_i sum_j tau_{j,i} sum_l c_{j,l} Q_i^l,
    // with l in S_i skipped (Q vanishes there)
    FracPolyVec y(problem_.gamma(), n);
    for (int i = 0; i < n; ++i) {
        const long top = g[static_cast<std::size_t>(i)].max_index();
        for (long l = 0; l <= top && l <= N; ++l) {
            if (table_.inaccessible(i, static_cast<int>(l)))
                continue;
            const double c = g[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(l));
            if (c != 0.0)
                y = y.axpy(c, table_.q(i, static_cast<int>(l)));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < h[static_cast<std::size_t>(i)]; ++k) {
            const int j = N + 1 + k;
            const double t = sol.taus[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (t == 0.0)
                continue;
            const FracPoly pj = basis_.orthonormal(j);
            for (int l = 0; l <= j; ++l) {
                if (table_.inaccessible(i, l))
                    continue;
                const double c = pj.coeff(static_cast<std::size_t>(l));
                if (c != 0.0)
                    y = y.axpy(t * c, table_.q(i, l));
            }
        }
    }
    sol.y_n = std::move(y);

    // tau-problem exactness: L Y_N - Pi_N G - H_N should vanish in coefficient space
    FracPolyVec defect = apply_operator(sol.y_n, problem_, lam_);
    for (int i = 0; i < n; ++i)
        defect[i] = defect[i].axpy(-1.0, g[static_cast<std::size_t>(i)]);
    defect = defect.axpy(-1.0, perturbation_term(sol, basis_));
    sol.residual_norm = defect.coeff_norm();
    return sol;
}

TauSolution solve(const Problem& problem, int N) {
    TauSolver solver(problem);
    return solver.solve(N);
}

std::vector<double> sup_error(const FracPolyVec& y_n,
                              const std::vector<std::function<double(double)>>& exact, int grid) {
    if (grid < 2)
        raise(ErrorKind::domain, "sup_error grid needs at least the two endpoints");
    if (static_cast<int>(exact.size()) != y_n.size())
        raise(ErrorKind::domain, "sup_error dimension mismatch");
    std::vector<double> err(static_cast<std::size_t>(y_n.size()), 0.0);
    for (int k = 0; k < grid; ++k) {
        const double t = static_cast<double>(k) / (grid - 1);
        for (int i = 0; i < y_n.size(); ++i)
            err[static_cast<std::size_t>(i)] = std::max(
                err[static_cast<std::size_t>(i)], std::fabs(y_n[i].eval(t) - exact[static_cast<std::size_t>(i)](t)));
    }
    return err;
}

std::vector<TauDecayRow> tau_decay_report(const std::vector<TauSolution>& solutions,
                                          const std::vector<std::function<double(double)>>* exact,
                                          int grid) {
    if (solutions.size() < 2)
        raise(ErrorKind::domain, "tau_decay_report needs at least two solutions");
    for (std::size_t k = 1; k < solutions.size(); ++k)
        if (solutions[k].N <= solutions[k - 1].N)
            raise(ErrorKind::domain, "tau_decay_report requires strictly increasing N");

    std::vector<TauDecayRow> rows;
    rows.reserve(solutions.size());
    for (const TauSolution& s : solutions) {
        TauDecayRow row;
        row.N = s.N;
        row.tau_norms = s.tau_norms;
        if (exact)
            row.errors = sup_error(s.y_n, *exact, grid);
        rows.push_back(std::move(row));
    }
    return rows;
}

FracPolyVec perturbation_term(const TauSolution& sol, const MuntzBasis& basis) {
    const int n = static_cast<int>(sol.taus.size());
    FracPolyVec hn(basis.gamma(), n);
    for (int i = 0; i < n; ++i)
        for (std::size_t k = 0; k < sol.taus[static_cast<std::size_t>(i)].size(); ++k) {
            const double t = sol.taus[static_cast<std::size_t>(i)][k];
            if (t != 0.0)
                hn[i] = hn[i].axpy(t, basis.orthonormal(sol.N + 1 + static_cast<int>(k)));
        }
    return hn;
}

} // namespace abeltau
