#pragma once

#include "gext/cohomology.hpp"

namespace gext {

// direct sum of two U-modules, block order (A | B)
template <class K>
Module<K> dsum_module(const Module<K>& A, const Module<K>& B) {
    Module<K> m;
    m.dim = A.dim + B.dim;
    for (size_t u = 0; u < A.act.size(); ++u) {
        Matrix<K> mu(m.dim, m.dim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) mu(i, j) = A.act[u](i, j);
        for (int i = 0; i < B.dim; ++i)
            for (int j = 0; j < B.dim; ++j) mu(A.dim + i, A.dim + j) = B.act[u](i, j);
        m.act.push_back(mu);
    }
    return m;
}

// quotient of a module by a U-stable relation span
template <class K>
struct QuotModule {
    Module<K> mod;
    QuotientSpace<K> q;
};

template <class K>
QuotModule<K> quot_module(const Module<K>& amb, Subspace<K> rel) {
    QuotModule<K> out;
    out.q = quotient(amb.dim, std::move(rel));
    out.mod.dim = out.q.dim;
    for (const auto& a : amb.act) {
        Matrix<K> m(out.q.dim, out.q.dim);
        for (int j = 0; j < out.q.dim; ++j)
            m.set_col(j, out.q.project(a.apply(out.q.lift(unit_vec<K>(out.q.dim, j)))));
        out.mod.act.push_back(m);
    }
    return out;
}

/*
 * A p-fold extension 0 -> Z -> E_{p-1} -> ... -> E_0 -> X -> 0 of U-modules.
 * M[k+1] holds the module in degree k (k = -1..p); D[k]: degree k -> k-1 for
 * k = 0..p, so D[p] = i_E and D[0] = p_E.
 */
template <class K>
struct Extension {
    int length = 0;
    std::vector<Module<K>> M;
    std::vector<Matrix<K>> D;

    const Module<K>& at(int k) const { return M[k + 1]; }
    const Matrix<K>& d(int k) const { return D[k]; }
    Matrix<K>& d(int k) { return D[k]; }
};

template <class K>
ValidationReport check_extension(const LeftBialgebroid<K>& B, const Extension<K>& E) {
    ValidationReport rep;
    int p = E.length;
    for (int k = 0; k <= p; ++k) {
        if (!check_equivariant(E.d(k), E.at(k).act, E.at(k - 1).act, "d").ok())
            rep.fail("extension-equivariant", "degree " + std::to_string(k));
        if (k >= 1 && !(E.d(k - 1) * E.d(k)).is_zero())
            rep.fail("extension-complex", "degree " + std::to_string(k));
    }
    // exactness at every spot
    if (kernel(E.d(p)).dim() != 0) rep.fail("exact-at-top", "i_E not injective");
    if (rank(E.d(0)) != E.at(-1).dim) rep.fail("exact-at-bottom", "p_E not surjective");
    for (int k = 0; k < p; ++k)
        if (rank(E.d(k)) + rank(E.d(k + 1)) != E.at(k).dim)
            rep.fail("exact-at", std::to_string(k));
    return rep;
}

// split extension 0 -> Z -> Z (+) X -> X -> 0: always exists, used as the
// factory fallback when Ext^1 vanishes
template <class K>
Extension<K> split_extension(const Module<K>& X, const Module<K>& Z) {
    Extension<K> E;
    E.length = 1;
    E.M = {X, dsum_module(Z, X), Z};
    Matrix<K> i(Z.dim + X.dim, Z.dim);
    for (int k = 0; k < Z.dim; ++k) i(k, k) = K(1);
    Matrix<K> pr(X.dim, Z.dim + X.dim);
    for (int k = 0; k < X.dim; ++k) pr(k, Z.dim + k) = K(1);
    E.D = {pr, i};
    return E;
}

/*
 * The extension factory: a degree-p cocycle c on Bar(U,X) with target Z
 * yields the p-fold extension obtained by pushing the truncated bar
 * resolution out along c, together with its canonical cocycle representative
 * phi (phi_p = c, lower components the canonical identifications).
 */
template <class K>
struct ExtensionWithRep {
    Extension<K> ext;
    std::vector<Matrix<K>> rep;  // rep[k+1]: Bar_k -> E_k matrices, k = -1..p
    const Matrix<K>& phi(int k) const { return rep[k + 1]; }
};

template <class K>
ExtensionWithRep<K> extension_from_cocycle(const OperadContext<K>& ctx, const Cochain<K>& c) {
    int p = c.degree;
    if (p < 1) throw std::invalid_argument("extension_from_cocycle: degree must be >= 1");
    if (!delta(ctx.barX, c).mat.is_zero())
        throw std::invalid_argument("extension_from_cocycle: not a cocycle");
    auto& bar = ctx.barX;
    bar.ensure(p);
    const Module<K>& Z = ctx.C.Z.mod;
    const Module<K>& X = ctx.C.X.mod;

    // E_{p-1} = (Z (+) Bar_{p-1}) / span{ (c(w), -d(w)) : w in Bar_p }
    Module<K> amb = dsum_module(Z, bar.lv[p - 1].mod);
    std::vector<SparseRow<K>> rels;
    for (int w = 0; w < bar.dim(p); ++w) {
        Vec<K> row(amb.dim, K(0));
        Vec<K> cw = c.mat.col(w);
        Vec<K> dw = bar.d(p).col(w);
        for (int i = 0; i < Z.dim; ++i) row[i] = cw[i];
        for (int i = 0; i < bar.dim(p - 1); ++i) row[Z.dim + i] = -dw[i];
        auto sp = to_sparse(row);
        if (!sp.empty()) rels.push_back(std::move(sp));
    }
    QuotModule<K> top = quot_module(amb, Subspace<K>::span(amb.dim, std::move(rels)));

    ExtensionWithRep<K> out;
    Extension<K>& E = out.ext;
    E.length = p;
    E.M.push_back(X);
    for (int k = 0; k <= p - 2; ++k) E.M.push_back(bar.lv[k].mod);
    E.M.push_back(top.mod);
    E.M.push_back(Z);

    // differentials
    if (p == 1) {
        Matrix<K> p0(X.dim, top.mod.dim);
        for (int j = 0; j < top.mod.dim; ++j) {
            Vec<K> lift = top.q.lift(unit_vec<K>(top.mod.dim, j));
            Vec<K> v(bar.dim(0));
            for (int i = 0; i < bar.dim(0); ++i) v[i] = lift[Z.dim + i];
            p0.set_col(j, bar.d(0).apply(v));
        }
        E.D.push_back(p0);
    } else {
        E.D.push_back(bar.d(0));
        for (int k = 1; k <= p - 2; ++k) E.D.push_back(bar.d(k));
        Matrix<K> dtop(bar.dim(p - 2), top.mod.dim);
        for (int j = 0; j < top.mod.dim; ++j) {
            Vec<K> lift = top.q.lift(unit_vec<K>(top.mod.dim, j));
            Vec<K> v(bar.dim(p - 1));
            for (int i = 0; i < bar.dim(p - 1); ++i) v[i] = lift[Z.dim + i];
            dtop.set_col(j, bar.d(p - 1).apply(v));
        }
        E.D.push_back(dtop);
    }
    Matrix<K> iE(top.mod.dim, Z.dim);
    for (int j = 0; j < Z.dim; ++j) {
        Vec<K> v(amb.dim, K(0));
        v[j] = K(1);
        iE.set_col(j, top.q.project(v));
    }
    E.D.push_back(iE);

    // canonical cocycle representative
    out.rep.push_back(Matrix<K>::identity(X.dim));
    for (int k = 0; k <= p - 2; ++k) out.rep.push_back(Matrix<K>::identity(bar.dim(k)));
    Matrix<K> inc(top.mod.dim, bar.dim(p - 1));
    for (int j = 0; j < bar.dim(p - 1); ++j) {
        Vec<K> v(amb.dim, K(0));
        v[Z.dim + j] = K(1);
        inc.set_col(j, top.q.project(v));
    }
    out.rep.push_back(inc);
    out.rep.push_back(c.mat);
    return out;
}

/*
 * Splicing (the hash operation). The generic case concatenates two
 * extensions through the common object Y; the degenerate cases take the
 * pullback resp. pushout.
 */
template <class K>
Extension<K> splice(const LeftBialgebroid<K>& B, const Extension<K>& E, const Extension<K>& F) {
    // codomain object of F (its degree p-level module? no: F's top) must equal
    // E's bottom: E in Ext(Y, Z), F in Ext(X, Y).
    if (E.at(-1).dim != F.at(F.length).dim)
        throw std::invalid_argument("splice: object mismatch");
    Extension<K> out;
    out.length = E.length + F.length;
    out.M.push_back(F.at(-1));
    for (int k = 0; k <= F.length - 1; ++k) out.M.push_back(F.at(k));
    for (int k = 0; k <= E.length - 1; ++k) out.M.push_back(E.at(k));
    out.M.push_back(E.at(E.length));
    for (int k = 0; k <= F.length - 1; ++k) out.D.push_back(F.d(k));
    out.D.push_back(F.d(F.length) * E.d(0));  // E_0 -> Y -> F_{q-1}
    for (int k = 1; k <= E.length; ++k) out.D.push_back(E.d(k));
    return out;
}

// E # f for a morphism f: X' -> Y (the q = 0 case): pullback on E_0
template <class K>
Extension<K> splice_pullback(const LeftBialgebroid<K>& B, const Extension<K>& E,
                             const Matrix<K>& f, const Module<K>& Xnew) {
    int p = E.length;
    // E_0 x_Y X' = ker( [p_E, -f] : E_0 (+) X' -> Y )
    Module<K> amb = dsum_module(E.at(0), Xnew);
    Matrix<K> cond(E.at(-1).dim, amb.dim);
    for (int j = 0; j < E.at(0).dim; ++j) cond.set_col(j, E.d(0).col(j));
    for (int j = 0; j < Xnew.dim; ++j) {
        Vec<K> c = f.col(j);
        for (auto& v : c) v = -v;
        cond.set_col(E.at(0).dim + j, c);
    }
    Subspace<K> sub = kernel(cond);
    Matrix<K> incl = sub.basis_matrix().transpose();  // amb x subdim
    Module<K> P;
    P.dim = sub.dim();
    for (const auto& a : amb.act) {
        auto coords = solve_matrix(incl, a * incl);
        if (!coords) throw std::runtime_error("splice_pullback: pullback not U-stable");
        P.act.push_back(*coords);
    }
    Extension<K> out;
    out.length = p;
    out.M.push_back(Xnew);
    out.M.push_back(P);
    for (int k = 1; k <= p - 1; ++k) out.M.push_back(E.at(k));
    out.M.push_back(E.at(p));
    // p: pr_{X'} on the pullback
    Matrix<K> pr(Xnew.dim, P.dim);
    for (int j = 0; j < P.dim; ++j)
        for (int i = 0; i < Xnew.dim; ++i) pr(i, j) = incl(E.at(0).dim + i, j);
    out.D.push_back(pr);
    if (p >= 1) {
        // E_1 -> P: (d, 0)
        Matrix<K> lift(amb.dim, E.at(1).dim);
        for (int j = 0; j < E.at(1).dim; ++j) {
            Vec<K> v(amb.dim, K(0));
            Vec<K> dv = E.d(1).col(j);
            for (int i = 0; i < E.at(0).dim; ++i) v[i] = dv[i];
            lift.set_col(j, v);
        }
        auto coords = solve_matrix(incl, lift);
        if (!coords) throw std::runtime_error("splice_pullback: (d,0) misses the pullback");
        out.D.push_back(*coords);
        for (int k = 2; k <= p; ++k) out.D.push_back(E.d(k));
    }
    return out;
}

// g # F for a morphism g: Y -> Z' (the p = 0 case): pushout on F_{q-1}
template <class K>
Extension<K> splice_pushout(const LeftBialgebroid<K>& B, const Matrix<K>& g,
                            const Module<K>& Znew, const Extension<K>& F) {
    int q = F.length;
    // Z' u_Y F_{q-1} = (Z' (+) F_{q-1}) / {(g(y), -i_F(y))}
    Module<K> amb = dsum_module(Znew, F.at(q - 1));
    std::vector<SparseRow<K>> rels;
    for (int y = 0; y < F.at(q).dim; ++y) {
        Vec<K> row(amb.dim, K(0));
        Vec<K> gy = g.col(y), iy = F.d(q).col(y);
        for (int i = 0; i < Znew.dim; ++i) row[i] = gy[i];
        for (int i = 0; i < F.at(q - 1).dim; ++i) row[Znew.dim + i] = -iy[i];
        auto sp = to_sparse(row);
        if (!sp.empty()) rels.push_back(std::move(sp));
    }
    QuotModule<K> P = quot_module(amb, Subspace<K>::span(amb.dim, std::move(rels)));
    Extension<K> out;
    out.length = q;
    out.M.push_back(F.at(-1));
    for (int k = 0; k <= q - 2; ++k) out.M.push_back(F.at(k));
    out.M.push_back(P.mod);
    out.M.push_back(Znew);
    for (int k = 0; k <= q - 2; ++k) out.D.push_back(F.d(k));
    if (q >= 2) {
        Matrix<K> dq(F.at(q - 2).dim, P.mod.dim);
        for (int j = 0; j < P.mod.dim; ++j) {
            Vec<K> lift = P.q.lift(unit_vec<K>(P.mod.dim, j));
            Vec<K> v(F.at(q - 1).dim);
            for (int i = 0; i < F.at(q - 1).dim; ++i) v[i] = lift[Znew.dim + i];
            dq.set_col(j, F.d(q - 1).apply(v));
        }
        out.D.push_back(dq);
    } else {
        // q = 1: P -> X is (z, f) |-> p_F(f)
        Matrix<K> d0(F.at(-1).dim, P.mod.dim);
        for (int j = 0; j < P.mod.dim; ++j) {
            Vec<K> lift = P.q.lift(unit_vec<K>(P.mod.dim, j));
            Vec<K> v(F.at(0).dim);
            for (int i = 0; i < F.at(0).dim; ++i) v[i] = lift[Znew.dim + i];
            d0.set_col(j, F.d(0).apply(v));
        }
        out.D.push_back(d0);
    }
    Matrix<K> iZ(P.mod.dim, Znew.dim);
    for (int j = 0; j < Znew.dim; ++j) {
        Vec<K> v(amb.dim, K(0));
        v[j] = K(1);
        iZ.set_col(j, P.q.project(v));
    }
    out.D.push_back(iZ);
    return out;
}

/*
 * Moloch(E, F): the truncated totalisation of E (x)_A F. Degree k carries
 * the direct sum of the blocks E_i (x)_A F_j with i + j = k (top degree only
 * Z (x) Z, degree -1 is X (x) X); the differential is d_E (x) id
 * horizontally and (-1)^i id (x) d_F vertically, with p_E (x) p_F in the
 * corner.
 */
template <class K>
struct MolochComplex {
    int p = 0, q = 0;
    std::vector<std::vector<std::pair<int, int>>> blocksAt;  // per degree 0..p+q
    std::map<std::pair<int, int>, UTensor<K>> block;
    std::vector<std::vector<int>> offsetAt;
    std::vector<Module<K>> M;  // M[k+1] = degree k module, k = -1..p+q
    std::vector<Matrix<K>> D;

    const Module<K>& at(int k) const { return M[k + 1]; }
    const Matrix<K>& d(int k) const { return D[k]; }

    // embed a map valued in one block into the full degree-k coordinates
    Matrix<K> embed(int k, int i, int j, const Matrix<K>& m) const {
        Matrix<K> out(at(k).dim, m.cols());
        const auto& bl = blocksAt[k];
        for (size_t b = 0; b < bl.size(); ++b)
            if (bl[b] == std::make_pair(i, j)) {
                int off = offsetAt[k][b];
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) out(off + r, c) = m(r, c);
                return out;
            }
        throw std::logic_error("moloch: no such block");
    }
    // project full degree-k coordinates onto one block
    Matrix<K> project_block(int k, int i, int j, const Matrix<K>& m) const {
        const auto& bl = blocksAt[k];
        for (size_t b = 0; b < bl.size(); ++b)
            if (bl[b] == std::make_pair(i, j)) {
                int off = offsetAt[k][b];
                int dim = block.at({i, j}).q.dim;
                Matrix<K> out(dim, m.cols());
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(off + r, c);
                return out;
            }
        throw std::logic_error("moloch: no such block");
    }
};

template <class K>
MolochComplex<K> moloch(const OperadContext<K>& ctx, const Extension<K>& E, const Extension<K>& F) {
    const auto& B = *ctx.B;
    MolochComplex<K> M;
    M.p = E.length;
    M.q = F.length;
    int p = M.p, q = M.q;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            M.block.emplace(std::make_pair(i, j), tensor_modules(B, E.at(i), F.at(j)));

    M.blocksAt.resize(p + q + 1);
    M.offsetAt.resize(p + q + 1);
    M.M.push_back(ctx.XX.mod);  // degree -1
    for (int k = 0; k <= p + q; ++k) {
        std::vector<std::pair<int, int>> bl;
        if (k == p + q) bl.push_back({p, q});
        else
            for (int i = std::max(0, k - q); i <= std::min(p, k); ++i) bl.push_back({i, k - i});
        int dim = 0;
        for (auto& ij : bl) {
            M.offsetAt[k].push_back(dim);
            dim += M.block.at(ij).q.dim;
        }
        M.blocksAt[k] = bl;
        // module: direct sum of blocks
        Module<K> mod;
        mod.dim = dim;
        for (int u = 0; u < B.U.dim; ++u) {
            Matrix<K> act(dim, dim);
            for (size_t b = 0; b < bl.size(); ++b) {
                const auto& T = M.block.at(bl[b]);
                int off = M.offsetAt[k][b];
                for (int r = 0; r < T.q.dim; ++r)
                    for (int c = 0; c < T.q.dim; ++c) act(off + r, off + c) = T.mod.act[u](r, c);
            }
            mod.act.push_back(act);
        }
        M.M.push_back(mod);
    }

    // differentials
    M.D.resize(p + q + 1);
    {
        const auto& T00 = M.block.at({0, 0});
        M.D[0] = tensor_map(T00, ctx.XX, E.d(0), F.d(0));
    }
    for (int k = 1; k <= p + q; ++k) {
        Matrix<K> dk(M.at(k - 1).dim, M.at(k).dim);
        for (size_t b = 0; b < M.blocksAt[k].size(); ++b) {
            auto [i, j] = M.blocksAt[k][b];
            int off = M.offsetAt[k][b];
            auto put = [&](const Matrix<K>& part, int ti, int tj) {
                Matrix<K> emb = M.embed(k - 1, ti, tj, part);
                for (int r = 0; r < emb.rows(); ++r)
                    for (int c = 0; c < emb.cols(); ++c) dk(r, off + c) += emb(r, c);
            };
            if (i >= 1 && i - 1 + j <= k - 1 && !(k - 1 == p + q))
                put(tensor_map(M.block.at({i, j}), M.block.at({i - 1, j}), E.d(i),
                               Matrix<K>::identity(F.at(j).dim)),
                    i - 1, j);
            if (j >= 1) {
                Matrix<K> part = tensor_map(M.block.at({i, j}), M.block.at({i, j - 1}),
                                            Matrix<K>::identity(E.at(i).dim), F.d(j));
                if (i % 2 != 0) part = -part;
                put(part, i, j - 1);
            }
        }
        M.D[k] = dk;
    }
    return M;
}

/*
 * Spliced tensor complexes. Shape A: (E (x) Z) # (X (x) F), degrees
 *   -1: X (x) X | 0..q-1: X (x) F_k | q..p+q-1: E_{k-q} (x) Z | p+q: Z (x) Z.
 * Shape B: (Z (x) F) # (E (x) X), degrees
 *   -1: X (x) X | 0..p-1: E_k (x) X | p..p+q: Z (x) F_{k-p}.
 */
template <class K>
struct SpliceComplex {
    int p = 0, q = 0, top = 0;
    bool shapeA = true;
    std::vector<UTensor<K>> T;  // T[k+1] = degree-k tensor, k = -1..top
    std::vector<Matrix<K>> D;

    const UTensor<K>& fac(int k) const { return T[k + 1]; }
    const Module<K>& at(int k) const { return T[k + 1].mod; }
    const Matrix<K>& d(int k) const { return D[k]; }
};

template <class K>
SpliceComplex<K> splice_EZ_XF(const OperadContext<K>& ctx, const Extension<K>& E,
                              const Extension<K>& F) {
    const auto& B = *ctx.B;
    const Module<K>& X = ctx.C.X.mod;
    const Module<K>& Z = ctx.C.Z.mod;
    SpliceComplex<K> S;
    S.p = E.length;
    S.q = F.length;
    S.top = S.p + S.q;
    S.shapeA = true;
    S.T.push_back(ctx.XX);
    for (int k = 0; k <= S.q - 1; ++k) S.T.push_back(tensor_modules(B, X, F.at(k)));
    for (int k = S.q; k <= S.top - 1; ++k) S.T.push_back(tensor_modules(B, E.at(k - S.q), Z));
    S.T.push_back(tensor_modules(B, Z, Z));
    S.D.resize(S.top + 1);
    for (int k = 0; k <= S.top; ++k) {
        if (k <= S.q - 1) {
            // X (x) F_k -> X (x) F_{k-1} (or X (x) X at the bottom)
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), Matrix<K>::identity(X.dim), F.d(k));
        } else if (k == S.q) {
            // E_0 (x) Z -> X (x) F_{q-1}: p_E (x) i_F
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), E.d(0), F.d(S.q));
        } else {
            // E_{k-q} (x) Z -> E_{k-q-1} (x) Z
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), E.d(k - S.q), Matrix<K>::identity(Z.dim));
        }
    }
    return S;
}

template <class K>
SpliceComplex<K> splice_ZF_EX(const OperadContext<K>& ctx, const Extension<K>& E,
                              const Extension<K>& F) {
    const auto& B = *ctx.B;
    const Module<K>& X = ctx.C.X.mod;
    const Module<K>& Z = ctx.C.Z.mod;
    SpliceComplex<K> S;
    S.p = E.length;
    S.q = F.length;
    S.top = S.p + S.q;
    S.shapeA = false;
    S.T.push_back(ctx.XX);
    for (int k = 0; k <= S.p - 1; ++k) S.T.push_back(tensor_modules(B, E.at(k), X));
    for (int k = S.p; k <= S.top; ++k) S.T.push_back(tensor_modules(B, Z, F.at(k - S.p)));
    S.D.resize(S.top + 1);
    for (int k = 0; k <= S.top; ++k) {
        if (k <= S.p - 1) {
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), E.d(k), Matrix<K>::identity(X.dim));
        } else if (k == S.p) {
            // Z (x) F_0 -> E_{p-1} (x) X: i_E (x) p_F
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), E.d(S.p), F.d(0));
        } else {
            S.D[k] = tensor_map(S.fac(k), S.fac(k - 1), Matrix<K>::identity(Z.dim), F.d(k - S.p));
        }
    }
    return S;
}

template <class K>
ValidationReport check_complex(const std::vector<Matrix<K>>& D) {
    ValidationReport rep;
    for (size_t k = 1; k < D.size(); ++k)
        if (!(D[k - 1] * D[k]).is_zero()) rep.fail("d-squared", std::to_string(k));
    return rep;
}

// graded collection of maps Bar_k(U, W) -> C_k, k = -1..top
template <class K>
struct GradedMaps {
    int top = 0;
    std::vector<Matrix<K>> comp;  // comp[k+1], k = -1..top
    Matrix<K>& at(int k) { return comp[k + 1]; }
    const Matrix<K>& at(int k) const { return comp[k + 1]; }
};

template <class K>
GradedMaps<K> zero_graded(int top, const std::vector<int>& dims, const std::vector<int>& barDims) {
    GradedMaps<K> g;
    g.top = top;
    for (int k = -1; k <= top; ++k) g.comp.push_back(Matrix<K>(dims[k + 1], barDims[k + 1]));
    return g;
}

/*
 * lambda_{E,F}: Moloch(E,F) -> (E (x) Z)#(X (x) F): the natural projection
 * onto E_{k-q} (x) Z in the upper range, (p_E (x) id) o pi onto X (x) F_k in
 * the lower range, identity in degree -1.
 */
template <class K>
std::vector<Matrix<K>> lambda_edge(const OperadContext<K>& ctx, const Extension<K>& E,
                                   const Extension<K>& F, const MolochComplex<K>& M,
                                   const SpliceComplex<K>& S) {
    int p = E.length, q = F.length;
    std::vector<Matrix<K>> out;  // out[k+1]: degree k component, k = -1..p+q
    out.push_back(Matrix<K>::identity(ctx.XX.q.dim));
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> full(S.at(k).dim, M.at(k).dim);
        if (k <= q - 1) {
            Matrix<K> part = tensor_map(M.block.at({0, k}), S.fac(k), E.d(0),
                                        Matrix<K>::identity(F.at(k).dim));
            full = part * M.project_block(k, 0, k, Matrix<K>::identity(M.at(k).dim));
        } else {
            Matrix<K> part = tensor_map(M.block.at({k - q, q}), S.fac(k),
                                        Matrix<K>::identity(E.at(k - q).dim),
                                        Matrix<K>::identity(F.at(q).dim));
            full = part * M.project_block(k, k - q, q, Matrix<K>::identity(M.at(k).dim));
        }
        out.push_back(full);
    }
    return out;
}

// rho_{E,F}: Moloch(E,F) -> (Z (x) F)#(E (x) X), with the literal scalar
// (-1)^{pk-p} on the upper-range projections.
template <class K>
std::vector<Matrix<K>> rho_edge(const OperadContext<K>& ctx, const Extension<K>& E,
                                const Extension<K>& F, const MolochComplex<K>& M,
                                const SpliceComplex<K>& S) {
    int p = E.length, q = F.length;
    std::vector<Matrix<K>> out;
    out.push_back(Matrix<K>::identity(ctx.XX.q.dim));
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> full(S.at(k).dim, M.at(k).dim);
        if (k <= p - 1) {
            Matrix<K> part = tensor_map(M.block.at({k, 0}), S.fac(k),
                                        Matrix<K>::identity(E.at(k).dim), F.d(0));
            full = part * M.project_block(k, k, 0, Matrix<K>::identity(M.at(k).dim));
        } else {
            Matrix<K> part = tensor_map(M.block.at({p, k - p}), S.fac(k),
                                        Matrix<K>::identity(E.at(p).dim),
                                        Matrix<K>::identity(F.at(k - p).dim));
            if ((p * k - p) % 2 != 0) part = -part;
            full = part * M.project_block(k, p, k - p, Matrix<K>::identity(M.at(k).dim));
        }
        out.push_back(full);
    }
    return out;
}

/*
 * The sigma|tau comparison: (Z (x) E)#(F (x) X) -> (E (x) Z)#(X (x) F),
 * componentwise tau on the lower band, sigma on the upper band. A chain map
 * exactly when (X, Z) is a commuting pair; the middle square is the one that
 * fails otherwise.
 */
template <class K>
std::vector<Matrix<K>> sigma_tau(const OperadContext<K>& ctx, const Extension<K>& E,
                                 const Extension<K>& F, const SpliceComplex<K>& src,
                                 const SpliceComplex<K>& dst) {
    const auto& B = *ctx.B;
    int p = E.length, q = F.length;
    std::vector<Matrix<K>> out;
    out.push_back(ctx.tauXX);
    for (int k = 0; k <= p + q; ++k) {
        if (k <= q - 1) {
            // tau_{F_k, X}: F_k (x) X -> X (x) F_k
            out.push_back(braiding_tau(B, F.at(k), ctx.C.X, src.fac(k), dst.fac(k)));
        } else {
            // sigma_{Z, E_{k-q}}: Z (x) E_{k-q} -> E_{k-q} (x) Z
            out.push_back(braiding_sigma(B, ctx.C.Z, E.at(k - q), src.fac(k), dst.fac(k)));
        }
    }
    return out;
}

// residuals d o f_k - f_{k-1} o d for a degreewise map between complexes
template <class K>
ValidationReport check_chain_map(const std::vector<Matrix<K>>& f,
                                 const std::vector<Matrix<K>>& dSrc,
                                 const std::vector<Matrix<K>>& dDst) {
    ValidationReport rep;
    // f[k+1]: degree k; dSrc[k], dDst[k]: degree k -> k-1
    for (size_t k = 0; k < dSrc.size(); ++k) {
        Matrix<K> lhs = dDst[k] * f[k + 1];
        Matrix<K> rhs = f[k] * dSrc[k];
        if (lhs != rhs) rep.fail("chain-map", "degree " + std::to_string(k));
    }
    return rep;
}

/*
 * Lift the identity (or a twist f) through an extension: solve the
 * commuting squares degree by degree inside the U-linear cochain spaces.
 * Returns one valid lift; different lifts differ by homotopies.
 */
template <class K>
GradedMaps<K> lift_chain_map_over(BarLadder<K>& bar, const Extension<K>& E,
                                  const Matrix<K>& twist) {
    int p = E.length;
    bar.ensure(p);
    GradedMaps<K> out;
    out.top = p;
    out.comp.push_back(twist);  // degree -1

    auto solve_step = [&](int k, const Matrix<K>& post, const Matrix<K>& rhs) {
        // find U-linear c: Bar_k -> E_k with post o c = rhs
        CochainSpace<K> S = cochain_space(bar, k, E.at(k));
        int nb = S.dim();
        long rows = long(rhs.rows()) * bar.dim(k);
        Matrix<K> sys(int(rows), nb);
        for (int b = 0; b < nb; ++b) {
            Vec<K> coords(nb, K(0));
            coords[b] = K(1);
            Cochain<K> cb = cochain_from_coords(bar, S, coords);
            Matrix<K> img = post * cb.mat;
            Vec<K> flat(rows);
            for (int r = 0; r < img.rows(); ++r)
                for (int c = 0; c < img.cols(); ++c) flat[long(r) * img.cols() + c] = img(r, c);
            sys.set_col(b, flat);
        }
        Vec<K> bvec(rows);
        for (int r = 0; r < rhs.rows(); ++r)
            for (int c = 0; c < rhs.cols(); ++c) bvec[long(r) * rhs.cols() + c] = rhs(r, c);
        auto sol = solve(sys, bvec);
        if (!sol) throw std::runtime_error("lift_chain_map: no lift at degree " + std::to_string(k));
        return cochain_from_coords(bar, S, *sol).mat;
    };

    // degree 0: p_E o phi_0 = twist o L
    out.comp.push_back(solve_step(0, E.d(0), twist * bar.d(0)));
    for (int k = 1; k <= p; ++k)
        out.comp.push_back(solve_step(k, E.d(k), out.at(k - 1) * bar.d(k)));
    return out;
}

template <class K>
GradedMaps<K> lift_chain_map(const OperadContext<K>& ctx, const Extension<K>& E,
                             const Matrix<K>& twist) {
    return lift_chain_map_over(ctx.barX, E, twist);
}

// The degenerate hash of two morphisms is plain composition.
template <class K>
Matrix<K> splice_compose(const Matrix<K>& e, const Matrix<K>& f) {
    return e * f;
}

} // namespace gext
