#pragma once

#include "gext/bialgebroid.hpp"

namespace gext {

// Left U-module by explicit action matrices per U-basis element.
template <class K>
struct Module {
    int dim = 0;
    std::vector<Matrix<K>> act;

    Matrix<K> act_of(const Vec<K>& u) const {
        Matrix<K> m(dim, dim);
        for (int i = 0; i < int(act.size()); ++i)
            if (!u[i].is_zero()) m += u[i] * act[i];
        return m;
    }
    Vec<K> apply(const Vec<K>& u, const Vec<K>& m) const {
        Vec<K> r(dim, K(0));
        for (int i = 0; i < int(act.size()); ++i)
            if (!u[i].is_zero()) axpy(r, u[i], act[i].apply(m));
        return r;
    }

    static Module trivial_via_counit(const LeftBialgebroid<K>& B) {
        // u . a := eps(u s(a)) on the base algebra A
        Module m;
        m.dim = B.A.dim;
        for (int i = 0; i < B.U.dim; ++i) {
            Matrix<K> mi(m.dim, m.dim);
            for (int a = 0; a < B.A.dim; ++a)
                mi.set_col(a, B.eps_of(B.U.mul(unit_vec<K>(B.U.dim, i), B.s.col(a))));
            m.act.push_back(mi);
        }
        return m;
    }

    static Module regular(const LeftBialgebroid<K>& B) {
        return Module{B.U.dim, B.U.lmul};
    }
};

// Action matrices of s(e_a) resp. t(e_a) on a module, indexed by the A-basis.
template <class K>
std::vector<Matrix<K>> acts_via_s(const LeftBialgebroid<K>& B, const Module<K>& m) {
    std::vector<Matrix<K>> v;
    for (int a = 0; a < B.A.dim; ++a) v.push_back(m.act_of(B.s.col(a)));
    return v;
}
template <class K>
std::vector<Matrix<K>> acts_via_t(const LeftBialgebroid<K>& B, const Module<K>& m) {
    std::vector<Matrix<K>> v;
    for (int a = 0; a < B.A.dim; ++a) v.push_back(m.act_of(B.t.col(a)));
    return v;
}

template <class K>
ValidationReport check_umodule(const LeftBialgebroid<K>& B, const Module<K>& m) {
    ValidationReport rep;
    if (m.act_of(B.U.unit) != Matrix<K>::identity(m.dim)) rep.fail("module-unital", "");
    for (int i = 0; i < B.U.dim; ++i)
        for (int j = 0; j < B.U.dim; ++j)
            if (m.act[i] * m.act[j] != m.act_of(B.U.basis_mul(i, j)))
                rep.fail("module-associative", idx2(i, j));
    // induced A-bimodule (Eq. forgetthis): a |> m <| b = s(a)t(b)m
    Bimodule<K> bm{m.dim, acts_via_s(B, m), acts_via_t(B, m)};
    rep.merge(check_bimodule(bm, B.A, B.A), "induced-bimodule");
    return rep;
}

/*
 * Monoidal tensor M (x)_A N of left U-modules: quotient of the k-tensor grid
 * by t(a)m (x) n - m (x) s(a)n, carrying the diagonal U-action through Delta.
 */
template <class K>
struct UTensor {
    int dimL = 0, dimR = 0;
    QuotientSpace<K> q;
    Module<K> mod;

    Vec<K> project(const Vec<K>& l, const Vec<K>& r) const { return project_pair(q, dimR, l, r); }
    Vec<K> project_basis(int l, int r) const {
        Vec<K> out(q.dim, K(0));
        q.accumulate(out, l * dimR + r, K(1));
        return out;
    }
};

template <class K>
UTensor<K> tensor_modules(const LeftBialgebroid<K>& B, const Module<K>& M, const Module<K>& N) {
    UTensor<K> T;
    T.dimL = M.dim;
    T.dimR = N.dim;
    T.q = balanced_tensor<K>(M.dim, N.dim, acts_via_t(B, M), acts_via_s(B, N));
    T.mod.dim = T.q.dim;
    T.mod.act.reserve(B.U.dim);
    for (int i = 0; i < B.U.dim; ++i) {
        Matrix<K> mi(T.q.dim, T.q.dim);
        for (int j = 0; j < T.q.dim; ++j) {
            int amb = T.q.rep_index[j];
            int l = amb / N.dim, r = amb % N.dim;
            Vec<K> out(T.q.dim, K(0));
            for (const auto& lg : B.delta[i]) {
                Vec<K> ml = M.act[lg.a].apply(unit_vec<K>(M.dim, l));
                Vec<K> nr = N.act[lg.b].apply(unit_vec<K>(N.dim, r));
                axpy(out, lg.c, T.project(ml, nr));
            }
            mi.set_col(j, out);
        }
        T.mod.act.push_back(mi);
    }
    return T;
}

// Quotient matrix of f (x) g between two balanced tensors.
template <class K>
Matrix<K> tensor_map(const UTensor<K>& src, const UTensor<K>& dst, const Matrix<K>& f,
                     const Matrix<K>& g) {
    Matrix<K> m(dst.q.dim, src.q.dim);
    for (int j = 0; j < src.q.dim; ++j) {
        int amb = src.q.rep_index[j];
        m.set_col(j, dst.project(f.col(amb / src.dimR), g.col(amb % src.dimR)));
    }
    return m;
}

// Canonical comparison (M (x) N) (x) P -> M (x) (N (x) P) on quotient bases,
// and its inverse direction; both built from representatives.
template <class K>
Matrix<K> reassociate_right(const UTensor<K>& MN, const UTensor<K>& MN_P,
                            const UTensor<K>& NP, const UTensor<K>& M_NP) {
    // source: (MN) (x) P, target: M (x) (NP)
    Matrix<K> m(M_NP.q.dim, MN_P.q.dim);
    for (int j = 0; j < MN_P.q.dim; ++j) {
        int amb = MN_P.q.rep_index[j];
        int mnIdx = amb / MN_P.dimR, p = amb % MN_P.dimR;
        int mnAmb = MN.q.rep_index[mnIdx];
        int mIdx = mnAmb / MN.dimR, nIdx = mnAmb % MN.dimR;
        m.set_col(j, M_NP.project(unit_vec<K>(M_NP.dimL, mIdx),
                                  NP.project_basis(nIdx, p)));
    }
    return m;
}

} // namespace gext
