#include "abeltau/canonical.hpp"

#include "abeltau/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace abeltau {

std::vector<double> invert_dense(std::vector<double> m, int n, int rank_for_error) {
    double scale = 0.0;
    for (double v : m)
        scale = std::max(scale, std::fabs(v));

    std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        inv[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto row = [&](std::vector<double>& a, int r) { return a.begin() + static_cast<long>(r) * n; };

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m[static_cast<std::size_t>(r) * n + col]) >
                std::fabs(m[static_cast<std::size_t>(piv) * n + col]))
                piv = r;
        const double pval = m[static_cast<std::size_t>(piv) * n + col];
        if (std::fabs(pval) <= 1e-12 * scale || pval == 0.0) {
            if (rank_for_error >= 0)
                raise(ErrorKind::singular_step,
                      "pivot matrix P_r singular at recursion rank r = " + std::to_string(rank_for_error));
            raise(ErrorKind::ill_posed_system, "tau system matrix is singular within pivot tolerance");
        }
        if (piv != col) {
            std::swap_ranges(row(m, piv), row(m, piv) + n, row(m, col));
            std::swap_ranges(row(inv, piv), row(inv, piv) + n, row(inv, col));
        }
        const double d = 1.0 / m[static_cast<std::size_t>(col) * n + col];
        for (int c = 0; c < n; ++c) {
            m[static_cast<std::size_t>(col) * n + c] *= d;
            inv[static_cast<std::size_t>(col) * n + c] *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = m[static_cast<std::size_t>(r) * n + col];
            if (f == 0.0)
                continue;
            for (int c = 0; c < n; ++c) {
                m[static_cast<std::size_t>(r) * n + c] -= f * m[static_cast<std::size_t>(col) * n + c];
                inv[static_cast<std::size_t>(r) * n + c] -= f * inv[static_cast<std::size_t>(col) * n + c];
            }
        }
    }
    return inv;
}

CanonicalTable::CanonicalTable(const Problem& problem, const LambdaSet& lam)
    : n_(problem.n()), gamma_(problem.gamma()), heights_(lam.heights), offsets_(lam.offsets) {
    q_table_.assign(static_cast<std::size_t>(n_), {});
    r_table_.assign(static_cast<std::size_t>(n_), {});
    // seeds: j in S_i = {0, ..., h_i - 1}: Q = 0, R = -t^{j sigma} e_i
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < heights_[static_cast<std::size_t>(i)]; ++j) {
            q_table_[static_cast<std::size_t>(i)].push_back(FracPolyVec(gamma_, n_));
            FracPolyVec r(gamma_, n_);
            r[i] = FracPoly::monomial(gamma_, static_cast<std::size_t>(j), -1.0);
            r_table_[static_cast<std::size_t>(i)].push_back(std::move(r));
        }
    }
}

bool CanonicalTable::has(int i, int j) const {
    return i >= 0 && i < n_ && j >= 0 &&
           static_cast<std::size_t>(j) < q_table_[static_cast<std::size_t>(i)].size();
}

const FracPolyVec& CanonicalTable::q(int i, int j) const {
    if (!has(i, j))
        raise(ErrorKind::internal, "canonical table entry (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") requested before generation");
    return q_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const FracPolyVec& CanonicalTable::r(int i, int j) const {
    if (!has(i, j))
        raise(ErrorKind::internal, "canonical residual (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") requested before generation");
    return r_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int CanonicalTable::max_common_index() const {
    int m = static_cast<int>(q_table_[0].size()) - 1;
    for (int i = 1; i < n_; ++i)
        m = std::min(m, static_cast<int>(q_table_[static_cast<std::size_t>(i)].size()) - 1);
    return m;
}

PivotPair CanonicalTable::pivot_matrix(int r, const LambdaSet& lam) const {
    PivotPair out;
    out.p.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.p[static_cast<std::size_t>(i) * n_ + j] =
                lam.tilde(i, j, r + offsets_[static_cast<std::size_t>(j)] + 1,
                          r + heights_[static_cast<std::size_t>(i)] + 1);
    out.d = invert_dense(out.p, n_, r);
    return out;
}

void CanonicalTable::extend_one_rank(const LambdaSet& lam) {
    const int r = ranks_done_;
    const PivotPair pd = pivot_matrix(r, lam);

    // column j of D assembles the new member of component j from the pieces
    //   t^{(r + Delta_i) sigma} e_i - sum_v sum_{l=1}^{r+h_v} L~_{v,i}(r+Delta_i+1, l) Q_v^{l-1}
    std::vector<FracPolyVec> piece_q, piece_r;
    piece_q.reserve(static_cast<std::size_t>(n_));
    piece_r.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        const int row = r + offsets_[static_cast<std::size_t>(i)] + 1;
        FracPolyVec pq(gamma_, n_);
        pq[i] = FracPoly::monomial(gamma_, static_cast<std::size_t>(r + offsets_[static_cast<std::size_t>(i)]));
        FracPolyVec pr(gamma_, n_);
        for (int v = 0; v < n_; ++v) {
            const int lmax = r + heights_[static_cast<std::size_t>(v)];
            for (int l = 1; l <= lmax; ++l) {
                const double w = lam.tilde(v, i, row, l);
                if (w == 0.0)
                    continue;
                pq = pq.axpy(-w, q_table_[static_cast<std::size_t>(v)][static_cast<std::size_t>(l - 1)]);
                pr = pr.axpy(-w, r_table_[static_cast<std::size_t>(v)][static_cast<std::size_t>(l - 1)]);
            }
        }
        piece_q.push_back(std::move(pq));
        piece_r.push_back(std::move(pr));
    }

    for (int j = 0; j < n_; ++j) {
        FracPolyVec qn(gamma_, n_), rn(gamma_, n_);
        for (int i = 0; i < n_; ++i) {
            const double dij = pd.d[static_cast<std::size_t>(i) * n_ + j];
            if (dij == 0.0)
                continue;
            qn = qn.axpy(dij, piece_q[static_cast<std::size_t>(i)]);
            rn = rn.axpy(dij, piece_r[static_cast<std::size_t>(i)]);
        }
        q_table_[static_cast<std::size_t>(j)].push_back(std::move(qn));
        r_table_[static_cast<std::size_t>(j)].push_back(std::move(rn));
    }
    ++ranks_done_;
}

void CanonicalTable::generate(int up_to, const LambdaSet& lam) {
    while (max_common_index() < up_to)
        extend_one_rank(lam);
}

std::string canonical_table_to_json(const CanonicalTable& table) {
    nlohmann::json j;
    j["format"] = "abeltau-canonical-table";
    j["version"] = 1;
    j["gamma"] = table.gamma_;
    j["n"] = table.n_;
    j["heights"] = table.heights_;
    j["offsets"] = table.offsets_;
    j["ranks_done"] = table.ranks_done_;
    auto dump_side = [&](const std::vector<std::vector<FracPolyVec>>& side) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& per_component : side) {
            nlohmann::json entries = nlohmann::json::array();
            for (const FracPolyVec& v : per_component) {
                nlohmann::json comps = nlohmann::json::array();
                for (int c = 0; c < v.size(); ++c)
                    comps.push_back(v[c].coeffs());
                entries.push_back(std::move(comps));
            }
            out.push_back(std::move(entries));
        }
        return out;
    };
    j["q"] = dump_side(table.q_table_);
    j["r"] = dump_side(table.r_table_);
    return j.dump();
}

CanonicalTable canonical_table_from_json(const std::string& text, const Problem& problem,
                                         const LambdaSet& lam) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        raise(ErrorKind::config, std::string("canonical table dump unreadable: ") + e.what());
    }
    if (j.value("format", "") != "abeltau-canonical-table" || j.value("version", 0) != 1)
        raise(ErrorKind::config, "canonical table dump has an unknown format or version");
    if (j.value("gamma", 0) != problem.gamma() || j.value("n", 0) != problem.n())
        raise(ErrorKind::config, "canonical table dump does not match this problem");

    CanonicalTable table(problem, lam);
    if (j.value("heights", std::vector<int>{}) != table.heights_ ||
        j.value("offsets", std::vector<int>{}) != table.offsets_)
        raise(ErrorKind::config, "canonical table dump heights differ from the built operator");

    auto load_side = [&](const nlohmann::json& side, std::vector<std::vector<FracPolyVec>>& into) {
        if (static_cast<int>(side.size()) != table.n_)
            raise(ErrorKind::config, "canonical table dump shape mismatch");
        for (int i = 0; i < table.n_; ++i) {
            into[static_cast<std::size_t>(i)].clear();
            for (const nlohmann::json& entry : side[static_cast<std::size_t>(i)]) {
                if (static_cast<int>(entry.size()) != table.n_)
                    raise(ErrorKind::config, "canonical table dump shape mismatch");
                FracPolyVec v(table.gamma_, table.n_);
                for (int c = 0; c < table.n_; ++c)
                    v[c] = FracPoly(table.gamma_, entry[static_cast<std::size_t>(c)].get<std::vector<double>>());
                into[static_cast<std::size_t>(i)].push_back(std::move(v));
            }
        }
    };
    load_side(j.at("q"), table.q_table_);
    load_side(j.at("r"), table.r_table_);
    table.ranks_done_ = j.value("ranks_done", 0);

    for (int i = 0; i < table.n_; ++i)
        if (static_cast<int>(table.q_table_[static_cast<std::size_t>(i)].size()) !=
            table.heights_[static_cast<std::size_t>(i)] + table.ranks_done_)
            raise(ErrorKind::config, "canonical table dump rank count inconsistent");
    return table;
}

} // namespace abeltau
