#pragma once

#include <vector>

#include "gext/algebra.hpp"

namespace gext {

// One term of a Sweedler-leg representative in an ambient two-factor tensor.
template <class K>
struct Leg2 {
    K c;
    int a, b;
};

template <class K>
using Legs = std::vector<Leg2<K>>;

// Chain of balanced tensor factors: quotient of the full grid by seam
// relations (L_s a) x_s (x) x_{s+1} - x_s (x) (R_s a) x_{s+1}.
template <class K>
QuotientSpace<K> chain_balanced(const std::vector<int>& dims,
                                const std::vector<std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>>>& seams) {
    int n = int(dims.size());
    assert(int(seams.size()) == n - 1);
    long ambient = 1;
    for (int d : dims) ambient *= d;
    std::vector<long> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];
    std::vector<SparseRow<K>> rels;
    std::vector<int> tup(n, 0);
    for (long idx = 0; idx < ambient; ++idx) {
        long rem = idx;
        for (int s = 0; s < n; ++s) { tup[s] = int(rem / stride[s]); rem %= stride[s]; }
        for (int s = 0; s + 1 < n; ++s) {
            const auto& [Ls, Rs] = seams[s];
            for (size_t a = 0; a < Ls.size(); ++a) {
                SparseRow<K> row;
                const Matrix<K>& L = Ls[a];
                const Matrix<K>& R = Rs[a];
                for (int l2 = 0; l2 < dims[s]; ++l2)
                    if (!L(l2, tup[s]).is_zero())
                        row.emplace_back(int(idx + (l2 - tup[s]) * stride[s]), L(l2, tup[s]));
                for (int r2 = 0; r2 < dims[s + 1]; ++r2)
                    if (!R(r2, tup[s + 1]).is_zero())
                        row.emplace_back(int(idx + (r2 - tup[s + 1]) * stride[s + 1]), -R(r2, tup[s + 1]));
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                SparseRow<K> out;
                for (auto& [cIdx, v] : row) {
                    if (!out.empty() && out.back().first == cIdx) out.back().second += v;
                    else out.emplace_back(cIdx, v);
                }
                out.erase(std::remove_if(out.begin(), out.end(),
                                         [](const auto& e) { return e.second.is_zero(); }),
                          out.end());
                if (!out.empty()) rels.push_back(std::move(out));
            }
        }
    }
    return quotient(int(ambient), Subspace<K>::span(int(ambient), std::move(rels)));
}

/*
 * Left bialgebroid (U, A, s, t, Delta, eps).
 *
 * The four A-actions on U:   b |> u = s(b)u     u <| c = t(c)u
 *                            a |>> u = u t(a)   u <<| d = u s(d)
 * i.e. a |>> b |> u <| c <<| d = t(c)s(b)u s(d)t(a).
 *
 * Delta is stored as one chosen representative in the ambient U (x) U per
 * basis element; it lands in the quotient U_<| (x)_A |>U with relation
 * t(a)u (x) v ~ u (x) s(a)v, and corestricts to the Sweedler-Takeuchi part.
 */
template <class K>
struct LeftBialgebroid {
    FiniteAlgebra<K> U;
    FiniteAlgebra<K> A;
    Matrix<K> s;  // dimU x dimA
    Matrix<K> t;  // dimU x dimA
    std::vector<Legs<K>> delta;  // per U-basis element
    Matrix<K> eps;               // dimA x dimU

    // per A-basis multiplication operators on U
    std::vector<Matrix<K>> s_lmul, t_lmul, s_rmul, t_rmul;

    void finish() {
        s_lmul.clear(); t_lmul.clear(); s_rmul.clear(); t_rmul.clear();
        for (int a = 0; a < A.dim; ++a) {
            Vec<K> sa = s.col(a), ta = t.col(a);
            s_lmul.push_back(U.lmul_by(sa));
            t_lmul.push_back(U.lmul_by(ta));
            s_rmul.push_back(U.rmul_by(sa));
            t_rmul.push_back(U.rmul_by(ta));
        }
    }

    Vec<K> s_of(const Vec<K>& a) const { return s.apply(a); }
    Vec<K> t_of(const Vec<K>& a) const { return t.apply(a); }
    Vec<K> eps_of(const Vec<K>& u) const { return eps.apply(u); }

    Legs<K> delta_of(const Vec<K>& u) const {
        Legs<K> out;
        for (int i = 0; i < U.dim; ++i) {
            if (u[i].is_zero()) continue;
            for (const auto& lg : delta[i]) out.push_back({u[i] * lg.c, lg.a, lg.b});
        }
        return out;
    }

    // Home of Delta: U_<| (x)_A |>U.
    QuotientSpace<K> takeuchi_home() const {
        return balanced_tensor<K>(U.dim, U.dim, t_lmul, s_lmul);
    }

    Vec<K> project_delta(const QuotientSpace<K>& home, int uBasis) const {
        Vec<K> out(home.dim, K(0));
        for (const auto& lg : delta[uBasis]) home.accumulate(out, lg.a * U.dim + lg.b, lg.c);
        return out;
    }
};

// U = A (x)_k A^op with factorwise product; Delta(a (x) b) = (a (x) 1) (x)_A (1 (x) b),
// eps(a (x) b) = ab, s(a) = a (x) 1, t(a) = 1 (x) a.
template <class K>
LeftBialgebroid<K> enveloping(const FiniteAlgebra<K>& A) {
    int n = A.dim;
    int N = n * n;
    auto id = [n](int i, int j) { return i * n + j; };
    std::vector<Vec<K>> table(N * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Vec<K> fst = A.basis_mul(i, k);  // e_i e_k
                    Vec<K> snd = A.basis_mul(l, j);  // opposite factor: e_l e_j
                    Vec<K> prod(N, K(0));
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            if (!fst[p].is_zero() && !snd[q].is_zero()) prod[id(p, q)] += fst[p] * snd[q];
                    table[id(i, j) * N + id(k, l)] = std::move(prod);
                }
    Vec<K> unit(N, K(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!A.unit[i].is_zero() && !A.unit[j].is_zero()) unit[id(i, j)] = A.unit[i] * A.unit[j];

    LeftBialgebroid<K> B;
    B.U = FiniteAlgebra<K>::make(N, table, unit);
    B.A = A;
    B.s = Matrix<K>(N, n);
    B.t = Matrix<K>(N, n);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) {
            if (!A.unit[j].is_zero()) {
                B.s(id(a, j), a) += A.unit[j];
                B.t(id(j, a), a) += A.unit[j];
            }
        }
    B.eps = Matrix<K>(n, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> prod = A.basis_mul(i, j);
            for (int k = 0; k < n; ++k) B.eps(k, id(i, j)) += prod[k];
        }
    B.delta.resize(N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> sa = B.s.col(i), tb = B.t.col(j);
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q)
                    if (!sa[p].is_zero() && !tb[q].is_zero())
                        B.delta[id(i, j)].push_back({sa[p] * tb[q], p, q});
        }
    B.finish();
    return B;
}

// A k-bialgebra (H, Delta_H, eps_H) as a left bialgebroid over the ground field.
template <class K>
LeftBialgebroid<K> from_bialgebra(const FiniteAlgebra<K>& H, const Matrix<K>& deltaH,
                                  const Matrix<K>& epsH) {
    if (deltaH.rows() != H.dim * H.dim || deltaH.cols() != H.dim)
        throw std::invalid_argument("from_bialgebra: delta must be dim^2 x dim");
    if (epsH.rows() != 1 || epsH.cols() != H.dim)
        throw std::invalid_argument("from_bialgebra: counit must be 1 x dim");
    LeftBialgebroid<K> B;
    B.U = H;
    B.A = FiniteAlgebra<K>::ground_field();
    B.s = Matrix<K>(H.dim, 1);
    B.s.set_col(0, H.unit);
    B.t = B.s;
    B.eps = epsH;
    B.delta.resize(H.dim);
    for (int u = 0; u < H.dim; ++u) {
        Vec<K> col = deltaH.col(u);
        for (int p = 0; p < H.dim; ++p)
            for (int q = 0; q < H.dim; ++q)
                if (!col[p * H.dim + q].is_zero()) B.delta[u].push_back({col[p * H.dim + q], p, q});
    }
    B.finish();
    return B;
}

// Exhaustive bialgebroid axiom check on all basis tuples.
template <class K>
ValidationReport check_bialgebroid(const LeftBialgebroid<K>& B) {
    ValidationReport rep;
    const auto& U = B.U;
    const auto& A = B.A;
    int nU = U.dim, nA = A.dim;

    if (B.s.apply(A.unit) != U.unit) rep.fail("source-unital", "");
    if (B.t.apply(A.unit) != U.unit) rep.fail("target-unital", "");
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < nA; ++j) {
            if (U.mul(B.s.col(i), B.s.col(j)) != B.s.apply(A.basis_mul(i, j)))
                rep.fail("source-morphism", idx2(i, j));
            if (U.mul(B.t.col(i), B.t.col(j)) != B.t.apply(A.basis_mul(j, i)))
                rep.fail("target-antimorphism", idx2(i, j));
            if (U.mul(B.s.col(i), B.t.col(j)) != U.mul(B.t.col(j), B.s.col(i)))
                rep.fail("source-target-commute", idx2(i, j));
        }

    // derived bimodule structures: (|>, <|) and (|>>, <<|)
    {
        Bimodule<K> m1{nU, B.s_lmul, B.t_lmul};
        rep.merge(check_bimodule(m1, A, A), "actions(lact,st)");
        Bimodule<K> m2{nU, B.t_rmul, B.s_rmul};
        rep.merge(check_bimodule(m2, A, A), "actions(blact,bract)");
    }

    // eps bimodule property: eps(s(a)t(b)u) = a eps(u) b
    for (int a = 0; a < nA; ++a)
        for (int b = 0; b < nA; ++b)
            for (int u = 0; u < nU; ++u) {
                Vec<K> lhs = B.eps_of(U.mul(B.s.col(a), U.mul(B.t.col(b), unit_vec<K>(nU, u))));
                Vec<K> rhs = A.mul(unit_vec<K>(nA, a), A.mul(B.eps_of(unit_vec<K>(nU, u)), unit_vec<K>(nA, b)));
                if (lhs != rhs) { rep.fail("counit-bilinear", idx3(a, b, u)); }
            }

    if (B.eps_of(U.unit) != A.unit) rep.fail("counit-of-unit", "");
    for (int a = 0; a < nA; ++a) {
        if (B.eps_of(B.s.col(a)) != unit_vec<K>(nA, a)) rep.fail("eps-s", std::to_string(a));
        if (B.eps_of(B.t.col(a)) != unit_vec<K>(nA, a)) rep.fail("eps-t", std::to_string(a));
    }

    // counit law in the Takeuchi convention
    for (int u = 0; u < nU; ++u)
        for (int v = 0; v < nU; ++v) {
            Vec<K> uv = B.eps_of(U.basis_mul(u, v));
            Vec<K> ev = B.eps_of(unit_vec<K>(nU, v));
            Vec<K> viaS = B.eps_of(U.mul(unit_vec<K>(nU, u), B.s_of(ev)));
            Vec<K> viaT = B.eps_of(U.mul(unit_vec<K>(nU, u), B.t_of(ev)));
            if (uv != viaS) rep.fail("counit-law-s", idx2(u, v));
            if (uv != viaT) rep.fail("counit-law-t", idx2(u, v));
        }

    // counitality of Delta: s(eps(u1)) u2 = u = t(eps(u2)) u1
    for (int u = 0; u < nU; ++u) {
        Vec<K> left(nU, K(0)), right(nU, K(0));
        for (const auto& lg : B.delta[u]) {
            axpy(left, lg.c, U.mul(B.s_of(B.eps_of(unit_vec<K>(nU, lg.a))), unit_vec<K>(nU, lg.b)));
            axpy(right, lg.c, U.mul(B.t_of(B.eps_of(unit_vec<K>(nU, lg.b))), unit_vec<K>(nU, lg.a)));
        }
        if (left != unit_vec<K>(nU, u)) rep.fail("counitality-left", std::to_string(u));
        if (right != unit_vec<K>(nU, u)) rep.fail("counitality-right", std::to_string(u));
    }

    QuotientSpace<K> home = B.takeuchi_home();

    // Delta(1) = 1 (x) 1
    {
        Vec<K> lhs(home.dim, K(0));
        for (int i = 0; i < nU; ++i)
            if (!U.unit[i].is_zero())
                for (const auto& lg : B.delta[i]) home.accumulate(lhs, lg.a * nU + lg.b, U.unit[i] * lg.c);
        Vec<K> rhs = project_pair(home, nU, U.unit, U.unit);
        if (lhs != rhs) rep.fail("delta-of-unit", "");
    }

    // Takeuchi corestriction: u1 t(a) (x) u2 = u1 (x) u2 s(a)
    for (int u = 0; u < nU; ++u)
        for (int a = 0; a < nA; ++a) {
            Vec<K> diff(home.dim, K(0));
            for (const auto& lg : B.delta[u]) {
                Vec<K> l1 = B.t_rmul[a].apply(unit_vec<K>(nU, lg.a));
                for (int p = 0; p < nU; ++p)
                    if (!l1[p].is_zero()) home.accumulate(diff, p * nU + lg.b, lg.c * l1[p]);
                Vec<K> r2 = B.s_rmul[a].apply(unit_vec<K>(nU, lg.b));
                for (int q = 0; q < nU; ++q)
                    if (!r2[q].is_zero()) home.accumulate(diff, lg.a * nU + q, -(lg.c * r2[q]));
            }
            if (!is_zero_vec(diff)) rep.fail("takeuchi", idx2(u, a));
        }

    // Delta multiplicative on the Takeuchi product
    for (int u = 0; u < nU; ++u)
        for (int v = 0; v < nU; ++v) {
            Vec<K> lhs(home.dim, K(0));
            Vec<K> prod = U.basis_mul(u, v);
            for (int i = 0; i < nU; ++i)
                if (!prod[i].is_zero())
                    for (const auto& lg : B.delta[i]) home.accumulate(lhs, lg.a * nU + lg.b, prod[i] * lg.c);
            Vec<K> rhs(home.dim, K(0));
            for (const auto& lu : B.delta[u])
                for (const auto& lv : B.delta[v]) {
                    Vec<K> p1 = U.basis_mul(lu.a, lv.a);
                    Vec<K> p2 = U.basis_mul(lu.b, lv.b);
                    K c = lu.c * lv.c;
                    for (int p = 0; p < nU; ++p)
                        if (!p1[p].is_zero())
                            for (int q = 0; q < nU; ++q)
                                if (!p2[q].is_zero()) home.accumulate(rhs, p * nU + q, c * p1[p] * p2[q]);
                }
            if (lhs != rhs) rep.fail("delta-multiplicative", idx2(u, v));
        }

    // coassociativity in (U <| x_A |> U <| ) x_A |> U
    {
        std::vector<int> dims{nU, nU, nU};
        std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> seam{B.t_lmul, B.s_lmul};
        QuotientSpace<K> tri = chain_balanced<K>(dims, {seam, seam});
        for (int u = 0; u < nU; ++u) {
            Vec<K> lhs(tri.dim, K(0)), rhs(tri.dim, K(0));
            for (const auto& lg : B.delta[u]) {
                for (const auto& lg1 : B.delta[lg.a])  // (Delta (x) id) Delta
                    tri.accumulate(lhs, (lg1.a * nU + lg1.b) * nU + lg.b, lg.c * lg1.c);
                for (const auto& lg2 : B.delta[lg.b])  // (id (x) Delta) Delta
                    tri.accumulate(rhs, (lg.a * nU + lg2.a) * nU + lg2.b, lg.c * lg2.c);
            }
            if (lhs != rhs) rep.fail("coassociativity", std::to_string(u));
        }
    }

    return rep;
}

} // namespace gext
