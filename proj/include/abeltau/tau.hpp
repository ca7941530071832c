#ifndef ABELTAU_TAU_HPP
#define ABELTAU_TAU_HPP

#include "abeltau/basis.hpp"
#include "abeltau/canonical.hpp"
#include "abeltau/fracpoly.hpp"
#include "abeltau/lambda.hpp"
#include "abeltau/problem.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace abeltau {

struct TauSolution {
    int N = 0;
    FracPolyVec y_n;
    // taus[i][k] = tau_{N+1+k, i} for k = 0..h_i-1
    std::vector<std::vector<double>> taus;
    // ||tau^_i|| = max_k |taus[i][k]| (0 when h_i = 0)
    std::vector<double> tau_norms;
    // coefficient norm of L Y_N - Pi_N G - H_N (exactness of the tau problem)
    double residual_norm = 0.0;
    // L2 norm of the forcing part beyond index N, per component, when the
    // forcing was given exactly; 0 otherwise
    std::vector<double> dropped_forcing;

    double max_tau() const;
};

/// forcing expanded to index N per component (exact pass-through when the
/// component is already a FracPoly of index <= N); dropped[i] reports the
/// truncated L2 mass for exact inputs
std::vector<FracPoly> expand_forcing(const Problem& problem, int N, std::vector<double>* dropped = nullptr);

struct TauSystem {
    int dim = 0;                 // sum_i h_i
    std::vector<double> m;       // row-major dim x dim
    std::vector<double> b;
    std::vector<std::pair<int, int>> unknowns; // (i, j) per column
};

/// residual-space coordinates of the tau unknowns (columns) and of the
/// forcing combination (right-hand side)
TauSystem assemble_tau_system(const CanonicalTable& table, const MuntzBasis& basis,
                              const std::vector<FracPoly>& g, int N);

// Shares the operator truncation, canonical table and Muntz basis across
// solves; degrees only ever grow, so a sweep generates each canonical rank
// once.  solve_prepared is const and safe to call concurrently after
// prepare(max N).
class TauSolver {
public:
    explicit TauSolver(Problem problem);

    const Problem& problem() const { return problem_; }
    const LambdaSet& lambda_set() const { return lam_; }
    const CanonicalTable& table() const { return table_; }
    const MuntzBasis& basis() const { return basis_; }

    void prepare(int N);
    TauSolution solve(int N);
    TauSolution solve_prepared(int N) const;

private:
    Problem problem_;
    LambdaSet lam_;
    CanonicalTable table_;
    MuntzBasis basis_;
    int prepared_N_ = -1;
};

/// one-shot convenience
TauSolution solve(const Problem& problem, int N);

/// per-component sup-norm error on a uniform grid (default 1001 points
/// including both endpoints)
std::vector<double> sup_error(const FracPolyVec& y_n,
                              const std::vector<std::function<double(double)>>& exact,
                              int grid = 1001);

struct TauDecayRow {
    int N = 0;
    std::vector<double> tau_norms;
    std::vector<double> errors; // empty when no exact solution given
};

/// (N, ||tau^_{i,N}||..., ||e_{i,N}||...) rows for increasing N
std::vector<TauDecayRow> tau_decay_report(
    const std::vector<TauSolution>& solutions,
    const std::vector<std::function<double(double)>>* exact = nullptr, int grid = 1001);

/// H_N rebuilt from the tau parameters and orthonormal basis coefficients
FracPolyVec perturbation_term(const TauSolution& sol, const MuntzBasis& basis);

} // namespace abeltau

#endif
