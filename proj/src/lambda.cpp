#include "abeltau/lambda.hpp"

#include "abeltau/error.hpp"
#include "abeltau/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abeltau {

double ktilde(const FracBivar& kernel, int delta, int v, int l) {
    if (v < 0 || l < 0)
        raise(ErrorKind::domain, "ktilde requires v, l >= 0");
    const int nk = kernel.degree();
    if (nk < 0 || v > 2 * nk)
        return 0.0;
    const double sigma = 1.0 / kernel.gamma();
    double acc = 0.0;
    for (int p = std::max(0, v - nk); p <= std::min(nk, v); ++p) {
        const int q = v - p;
        const double c = kernel.coeff(p, q);
        if (c == 0.0)
            continue;
        acc += c * beta_fn(delta * sigma, (q + l) * sigma + 1.0);
    }
    return acc;
}

LambdaMatrix::LambdaMatrix(const FracBivar& kernel, int delta, int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    const int nk = kernel.degree();
    if (nk < 0)
        return;
    for (int r = 1; r <= rows; ++r) {
        const int c_lo = delta + r;
        const int c_hi = std::min(cols, delta + r + 2 * nk);
        for (int c = c_lo; c <= c_hi; ++c)
            data_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)] =
                ktilde(kernel, delta, c - delta - r, r - 1);
    }
}

int LambdaMatrix::band_height(double tol) const {
    int h = 0;
    for (int r = 1; r <= rows_; ++r)
        for (int c = r + 1; c <= cols_; ++c)
            if (std::fabs(entry(r, c)) > tol)
                h = std::max(h, c - r);
    return h;
}

int LambdaSet::max_height() const {
    int m = 0;
    for (int h : heights)
        m = std::max(m, h);
    return m;
}

double LambdaSet::tilde(int i, int j, int r, int c) const {
    if (r < 1 || c < 1 || r > rows || c > cols)
        raise(ErrorKind::capacity, "Lambda~ access (" + std::to_string(r) + ", " + std::to_string(c) +
                                       ") outside built truncation");
    const double v = -lambda(i, j).entry(r, c);
    return (i == j && r == c) ? 1.0 + v : v;
}

LambdaSet build_lambda_set(const Problem& problem, int rows) {
    const int n = problem.n();
    LambdaSet out;
    out.n = n;
    out.gamma = problem.gamma();
    out.rows = rows;
    out.cols = rows + problem.max_delta() + 2 * problem.max_kernel_degree() + 1;

    out.lambdas.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.lambdas.emplace_back(problem.kernel(i, j), problem.delta(i, j), out.rows, out.cols);

    out.pair_heights.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.pair_heights[static_cast<std::size_t>(i) * n + j] = out.lambda(i, j).band_height();

    out.heights.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.heights[static_cast<std::size_t>(i)] =
                std::max(out.heights[static_cast<std::size_t>(i)], out.pair_height(i, j));

    out.offsets.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        int d = out.heights[0] - out.pair_height(0, j);
        for (int i = 1; i < n; ++i)
            d = std::min(d, out.heights[static_cast<std::size_t>(i)] - out.pair_height(i, j));
        out.offsets[static_cast<std::size_t>(j)] = d;
    }
    return out;
}

int lambda_rows_for(const Problem& problem, int N) {
    // enough rows for the canonical recursion to rank N + max h and for
    // verification applies on the generated polynomials
    LambdaSet probe = build_lambda_set(problem, 8);
    const int hmax = probe.max_height();
    int dmax = 0;
    for (int d : probe.offsets)
        dmax = std::max(dmax, d);
    return N + 2 * hmax + dmax + 4;
}

FracPolyVec apply_operator(const FracPolyVec& y, const Problem& problem, const LambdaSet& lam) {
    const int n = problem.n();
    if (y.size() != n)
        raise(ErrorKind::domain, "apply_operator dimension mismatch");
    if (y.max_index() + 1 > lam.rows)
        raise(ErrorKind::capacity,
              "operand degree index " + std::to_string(y.max_index()) +
                  " exceeds built operator truncation (" + std::to_string(lam.rows) + " rows)");

    FracPolyVec out = y;
    for (int l = 0; l < n; ++l) {
        const long deg = y[l].max_index();
        for (long r = 0; r <= deg; ++r) {
            const double c = y[l].coeff(static_cast<std::size_t>(r));
            if (c == 0.0)
                continue;
            for (int i = 0; i < n; ++i) {
                const LambdaMatrix& m = lam.lambda(i, l);
                const int row = static_cast<int>(r) + 1;
                const int c_lo = problem.delta(i, l) + row;
                const int c_hi = std::min(lam.cols, c_lo + 2 * problem.kernel(i, l).degree());
                for (int col = c_lo; col <= c_hi; ++col) {
                    const double e = m.entry(row, col);
                    if (e != 0.0)
                        out[i].add_term(static_cast<std::size_t>(col - 1), -c * e);
                }
            }
        }
    }
    return out;
}

} // namespace abeltau
