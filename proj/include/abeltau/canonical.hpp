#ifndef ABELTAU_CANONICAL_HPP
#define ABELTAU_CANONICAL_HPP

#include "abeltau/fracpoly.hpp"
#include "abeltau/lambda.hpp"
#include "abeltau/problem.hpp"

#include <string>
#include <vector>

namespace abeltau {

// Fractional vector canonical polynomials of the operator L:
//
//     L(Q_i^j) = t^{j sigma} e_i + R_i^j,
//
// with residuals R_i^j confined to span{ t^{l sigma} e_v : l in S_v },
// S_v = {0, ..., h_v - 1}.  Indices j in S_i seed the table with Q = 0,
// R = -t^{j sigma} e_i; every later rank r adds one new member per component
// through the joint recursion driven by the inverse of the n x n pivot
// matrix P_r.  The table is memoized: raising the target rank reuses all
// previously generated members.

/// pivot matrix P_r and its inverse D (row-major n x n)
struct PivotPair {
    std::vector<double> p;
    std::vector<double> d;
};

class CanonicalTable {
public:
    CanonicalTable() = default;
    CanonicalTable(const Problem& problem, const LambdaSet& lam);

    int n() const { return n_; }
    int gamma() const { return gamma_; }
    const std::vector<int>& heights() const { return heights_; }

    /// S_i membership: j < h_i
    bool inaccessible(int i, int j) const { return j < heights_[static_cast<std::size_t>(i)]; }

    bool has(int i, int j) const;
    const FracPolyVec& q(int i, int j) const;
    const FracPolyVec& r(int i, int j) const;

    /// number of recursion ranks generated so far
    int ranks_done() const { return ranks_done_; }
    /// highest index j guaranteed present for every component
    int max_common_index() const;

    /// P_r assembled per the recursion and D = P_r^{-1} by pivoted elimination
    PivotPair pivot_matrix(int r, const LambdaSet& lam) const;

    /// run the recursion so that Q_i^j exists for all i and all j <= up_to
    void generate(int up_to, const LambdaSet& lam);

    friend std::string canonical_table_to_json(const CanonicalTable& table);
    friend CanonicalTable canonical_table_from_json(const std::string& text, const Problem& problem,
                                                    const LambdaSet& lam);

private:
    void extend_one_rank(const LambdaSet& lam);

    int n_ = 0;
    int gamma_ = 1;
    std::vector<int> heights_;
    std::vector<int> offsets_;
    int ranks_done_ = 0;
    // entry (i, j) lives at table_[i][j]; S_i members are the seeds
    std::vector<std::vector<FracPolyVec>> q_table_;
    std::vector<std::vector<FracPolyVec>> r_table_;
};

/// invert a small row-major matrix by partial-pivot elimination; singular
/// within 1e-12 * max|entry| raises (kind names the recursion rank when >= 0)
std::vector<double> invert_dense(std::vector<double> m, int n, int rank_for_error = -1);

// Versioned JSON dump of a generated table for reuse across runs.  Carries
// the lattice, heights/offsets and every stored coefficient; loading verifies
// the version and shape.
std::string canonical_table_to_json(const CanonicalTable& table);
CanonicalTable canonical_table_from_json(const std::string& text, const Problem& problem,
                                         const LambdaSet& lam);

} // namespace abeltau

#endif
