#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gext/matrix.hpp"

namespace gext {

// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

template <class K>
SparseRow<K> to_sparse(const Vec<K>& v) {
    SparseRow<K> r;
    for (int j = 0; j < int(v.size()); ++j)
        if (!v[j].is_zero()) r.emplace_back(j, v[j]);
    return r;
}

template <class K>
Vec<K> to_dense(const SparseRow<K>& r, int n) {
    Vec<K> v(n, K(0));
    for (const auto& [j, c] : r) v[j] = c;
    return v;
}

namespace detail {

// y += a*x on sorted sparse rows.
template <class K>
SparseRow<K> sparse_axpy(const SparseRow<K>& y, const K& a, const SparseRow<K>& x) {
    SparseRow<K> r;
    r.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            r.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            K c = a * x[j].second;
            if (!c.is_zero()) r.emplace_back(x[j].first, c);
            ++j;
        } else {
            K c = y[i].second + a * x[j].second;
            if (!c.is_zero()) r.emplace_back(y[i].first, c);
            ++i; ++j;
        }
    }
    return r;
}

} // namespace detail

// Reduced row echelon of a set of sparse rows. Result rows are monic, fully
// reduced, sorted by pivot column: the canonical basis of the row space.
template <class K>
std::vector<SparseRow<K>> sparse_rref(std::vector<SparseRow<K>> rows) {
    std::map<int, SparseRow<K>> byPivot; // pivot column -> reduced row
    for (auto& row : rows) {
        SparseRow<K> cur = std::move(row);
        // reduce against existing pivots
        for (size_t i = 0; i < cur.size();) {
            auto it = byPivot.find(cur[i].first);
            if (it == byPivot.end()) { ++i; continue; }
            K c = cur[i].second;
            cur = detail::sparse_axpy(cur, -c, it->second);
            // restart scan at same position: entries before i are untouched
            // (pivot rows have no entries left of their pivot among pivot cols),
            // but simpler and safe: rescan from current index.
        }
        if (cur.empty()) continue;
        K lead = cur[0].second;
        if (!lead.is_one()) {
            K inv = lead.inv();
            for (auto& [j, c] : cur) c = inv * c;
        }
        int piv = cur[0].first;
        // back-substitute into existing rows
        for (auto& [p, r] : byPivot) {
            // find coefficient at piv
            auto pos = std::lower_bound(r.begin(), r.end(), piv,
                                        [](const auto& e, int col) { return e.first < col; });
            if (pos != r.end() && pos->first == piv) {
                K c = pos->second;
                r = detail::sparse_axpy(r, -c, cur);
            }
        }
        byPivot.emplace(piv, std::move(cur));
    }
    std::vector<SparseRow<K>> out;
    out.reserve(byPivot.size());
    for (auto& [p, r] : byPivot) out.push_back(std::move(r));
    return out;
}

// Canonical subspace of K^n: the reduced-echelon basis of a row span.
// Two subspaces are equal iff their stored bases are identical.
template <class K>
struct Subspace {
    int ambient_dim = 0;
    std::vector<SparseRow<K>> basis; // RREF rows, sorted by pivot

    int dim() const { return int(basis.size()); }

    static Subspace zero(int n) { return Subspace{n, {}}; }
    static Subspace full(int n) {
        Subspace s{n, {}};
        for (int i = 0; i < n; ++i) s.basis.push_back({{i, K(1)}});
        return s;
    }
    static Subspace span(int n, std::vector<SparseRow<K>> rows) {
        return Subspace{n, sparse_rref(std::move(rows))};
    }
    static Subspace row_space(const Matrix<K>& m) {
        std::vector<SparseRow<K>> rows;
        for (int i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
        return span(m.cols(), std::move(rows));
    }

    Matrix<K> basis_matrix() const {
        Matrix<K> b(dim(), ambient_dim);
        for (int i = 0; i < dim(); ++i)
            for (const auto& [j, c] : basis[i]) b(i, j) = c;
        return b;
    }

    // Reduces v modulo the subspace; empty residual means membership.
    SparseRow<K> reduce(SparseRow<K> v) const {
        for (const auto& row : basis) {
            int piv = row[0].first;
            auto pos = std::lower_bound(v.begin(), v.end(), piv,
                                        [](const auto& e, int col) { return e.first < col; });
            if (pos != v.end() && pos->first == piv)
                v = detail::sparse_axpy(v, -pos->second, row);
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return reduce(to_sparse(v)).empty(); }
    bool contains_subspace(const Subspace& o) const {
        for (const auto& r : o.basis)
            if (!reduce(r).empty()) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim == b.ambient_dim && a.basis == b.basis;
    }
};

// Dense reduced row-echelon form; the unique canonical representative of the
// row space of m.
template <class K>
Matrix<K> rref(const Matrix<K>& m) {
    std::vector<SparseRow<K>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
    auto red = sparse_rref(std::move(rows));
    Matrix<K> out(m.rows(), m.cols());
    for (int i = 0; i < int(red.size()); ++i)
        for (const auto& [j, c] : red[i]) out(i, j) = c;
    return out;
}

template <class K>
int rank(const Matrix<K>& m) {
    std::vector<SparseRow<K>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
    return int(sparse_rref(std::move(rows)).size());
}

// Canonical basis of {v : m v = 0}.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
    // RREF of m, then back-substitution for each free column.
    std::vector<SparseRow<K>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
    auto red = sparse_rref(std::move(rows));
    int n = m.cols();
    std::vector<int> pivotOf(n, -1);
    for (int r = 0; r < int(red.size()); ++r) pivotOf[red[r][0].first] = r;
    std::vector<SparseRow<K>> gens;
    for (int f = 0; f < n; ++f) {
        if (pivotOf[f] >= 0) continue;
        SparseRow<K> v{{f, K(1)}};
        for (int c = 0; c < n; ++c) {
            int r = pivotOf[c];
            if (r < 0) continue;
            // coefficient of the RREF row r at column f
            const auto& row = red[r];
            auto pos = std::lower_bound(row.begin(), row.end(), f,
                                        [](const auto& e, int col) { return e.first < col; });
            if (pos != row.end() && pos->first == f)
                v.emplace_back(c, -pos->second);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        gens.push_back(std::move(v));
    }
    return Subspace<K>::span(n, std::move(gens));
}

// Some x with m x = b, if any. Absence is a value, not an error.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
    assert(int(b.size()) == m.rows());
    // eliminate on the augmented system [m | b]
    int n = m.cols();
    std::vector<SparseRow<K>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        SparseRow<K> r = to_sparse(m.row(i));
        if (!b[i].is_zero()) r.emplace_back(n, b[i]);
        rows.push_back(std::move(r));
    }
    auto red = sparse_rref(std::move(rows));
    Vec<K> x(n, K(0));
    for (const auto& row : red) {
        if (row[0].first == n) return std::nullopt; // 0 = nonzero
    }
    // RREF rows: pivot var = rhs - free part; set free vars to 0.
    std::vector<int> isPivot(n, 0);
    for (const auto& row : red) isPivot[row[0].first] = 1;
    for (const auto& row : red) {
        int piv = row[0].first;
        K val(0);
        for (const auto& [j, c] : row) {
            if (j == n) val += c;          // rhs
            // free columns contribute 0
        }
        x[piv] = val;
    }
    return x;
}

// Solve M X = B columnwise; nullopt if any column is inconsistent.
template <class K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K>& m, const Matrix<K>& b) {
    assert(b.rows() == m.rows());
    Matrix<K> x(m.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto xi = solve(m, b.col(j));
        if (!xi) return std::nullopt;
        x.set_col(j, *xi);
    }
    return x;
}

// Quotient of K^ambient by a relation subspace, with a canonical section.
// Representatives are the pivot-complement coordinate vectors, so every
// quotient basis vector lifts to a single ambient basis vector.
template <class K>
struct QuotientSpace {
    int ambient_dim = 0;
    Subspace<K> relations;
    int dim = 0;
    std::vector<int> rep_index;               // quotient basis -> ambient index
    std::vector<SparseRow<K>> proj_col;       // ambient index -> quotient coords

    static QuotientSpace build(int ambient, Subspace<K> rel) {
        QuotientSpace q;
        q.ambient_dim = ambient;
        q.relations = std::move(rel);
        std::vector<int> pivotRow(ambient, -1);
        for (int r = 0; r < q.relations.dim(); ++r)
            pivotRow[q.relations.basis[r][0].first] = r;
        std::vector<int> qIndex(ambient, -1);
        for (int c = 0; c < ambient; ++c)
            if (pivotRow[c] < 0) {
                qIndex[c] = q.dim++;
                q.rep_index.push_back(c);
            }
        q.proj_col.resize(ambient);
        for (int c = 0; c < ambient; ++c) {
            if (pivotRow[c] < 0) {
                q.proj_col[c] = {{qIndex[c], K(1)}};
            } else {
                // e_c ~ -sum_{free f} row[f] e_f
                for (const auto& [j, coef] : q.relations.basis[pivotRow[c]]) {
                    if (j == c) continue;
                    q.proj_col[c].emplace_back(qIndex[j], -coef);
                }
                std::sort(q.proj_col[c].begin(), q.proj_col[c].end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
            }
        }
        return q;
    }

    Vec<K> project(const Vec<K>& ambient) const {
        assert(int(ambient.size()) == ambient_dim);
        Vec<K> out(dim, K(0));
        for (int c = 0; c < ambient_dim; ++c) {
            if (ambient[c].is_zero()) continue;
            for (const auto& [j, coef] : proj_col[c]) out[j] += coef * ambient[c];
        }
        return out;
    }

    void accumulate(Vec<K>& out, int ambient_index, const K& coeff) const {
        for (const auto& [j, coef] : proj_col[ambient_index]) out[j] += coef * coeff;
    }

    Vec<K> lift(const Vec<K>& quot) const {
        Vec<K> out(ambient_dim, K(0));
        for (int j = 0; j < dim; ++j) out[rep_index[j]] = quot[j];
        return out;
    }

    Matrix<K> projection_matrix() const {
        Matrix<K> p(dim, ambient_dim);
        for (int c = 0; c < ambient_dim; ++c)
            for (const auto& [j, coef] : proj_col[c]) p(j, c) = coef;
        return p;
    }
    Matrix<K> representative_matrix() const {
        Matrix<K> r(ambient_dim, dim);
        for (int j = 0; j < dim; ++j) r(rep_index[j], j) = K(1);
        return r;
    }
};

template <class K>
QuotientSpace<K> quotient(int ambient_dim, Subspace<K> rel) {
    assert(rel.ambient_dim == ambient_dim);
    return QuotientSpace<K>::build(ambient_dim, std::move(rel));
}

} // namespace gext
