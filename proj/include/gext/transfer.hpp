#pragma once

#include "gext/extension.hpp"

namespace gext {

/*
 * G = mu # H # Delta_X for H = (E (x) Z)#(X (x) F) of length r = p + q.
 * Degree 0 carries the ambient H_0 (+) X with the honest G_0 recorded as the
 * pullback subspace {(h, x) : p_H h = Delta_X x}; degree r-1 is the pushout
 * quotient of Z (+) H_{r-1} by span{(mu w, i_H w)} with d(z) = class(-z, 0).
 */
template <class K>
struct HashMuDelta {
    int r = 0;
    bool merged = false;       // r = 1: pushout and pullback share degree 0
    std::vector<Module<K>> M;  // M[k+1]: degree k, k = -1..r
    std::vector<Matrix<K>> D;  // D[k]: k -> k-1
    Subspace<K> pullback0;
    QuotientSpace<K> push_q;   // of Z (+) H_{r-1}; merged: of Z (+) H_0 (+) X
    Matrix<K> DXmat;           // Delta_X: X -> XX coords
    std::vector<Matrix<K>> DXbar;  // Bar_k(U,X) -> Bar_k(U,XX)
    Matrix<K> muq;             // mu on the ZZ quotient -> Z

    const Module<K>& at(int k) const { return M[k + 1]; }
    const Matrix<K>& d(int k) const { return D[k]; }
};

template <class K>
HashMuDelta<K> hash_mu_delta(const OperadContext<K>& ctx, const SpliceComplex<K>& H) {
    const auto& B = *ctx.B;
    const Module<K>& X = ctx.C.X.mod;
    const Module<K>& Z = ctx.C.Z.mod;
    HashMuDelta<K> G;
    G.r = H.top;
    int r = G.r;
    if (r < 1) throw std::invalid_argument("hash_mu_delta: needs length >= 1");

    // Delta_X on quotient coordinates and its bar-level versions
    G.DXmat = Matrix<K>(ctx.XX.q.dim, X.dim);
    for (int x = 0; x < X.dim; ++x) {
        Vec<K> v(ctx.XX.q.dim, K(0));
        for (const auto& lg : ctx.C.X.comul[x])
            ctx.XX.q.accumulate(v, lg.a * X.dim + lg.b, lg.c);
        G.DXmat.set_col(x, v);
    }
    ctx.barX.ensure(r + 1);
    ctx.barXX.ensure(r + 1);
    for (int k = 0; k <= r + 1; ++k) {
        Matrix<K> m(ctx.barXX.dim(k), ctx.barX.dim(k));
        for (int j = 0; j < ctx.barX.dim(k); ++j) {
            std::vector<int> tup = ctx.barX.tuple(k, j);
            std::vector<Vec<K>> slots;
            for (int s = 0; s <= k; ++s) slots.push_back(unit_vec<K>(B.U.dim, tup[s]));
            m.set_col(j, ctx.barXX.project(k, slots, G.DXmat.col(tup[k + 1])));
        }
        G.DXbar.push_back(m);
    }

    // mu: Z (x)_A Z quotient -> Z
    G.muq = Matrix<K>(Z.dim, ctx.ZZ.q.dim);
    for (int j = 0; j < ctx.ZZ.q.dim; ++j) {
        int amb = ctx.ZZ.q.rep_index[j];
        G.muq.set_col(j, ctx.C.Z.mul(unit_vec<K>(Z.dim, amb / Z.dim),
                                     unit_vec<K>(Z.dim, amb % Z.dim)));
    }

    if (r == 1) {
        // merged case: G_0 = Z u_{Z(x)Z} H_0 x_{X(x)X} X realized as the
        // pushout quotient of Z (+) H_0 (+) X with the pullback condition
        // recorded as a subspace
        G.merged = true;
        Module<K> amb3 = dsum_module(dsum_module(Z, H.at(0)), X);
        std::vector<SparseRow<K>> rels;
        for (int w = 0; w < ctx.ZZ.q.dim; ++w) {
            Vec<K> row(amb3.dim, K(0));
            Vec<K> mw = G.muq.col(w);
            Vec<K> iw = H.d(1).col(w);
            for (int i = 0; i < Z.dim; ++i) row[i] = mw[i];
            for (int i = 0; i < H.at(0).dim; ++i) row[Z.dim + i] = iw[i];
            auto sp = to_sparse(row);
            if (!sp.empty()) rels.push_back(std::move(sp));
        }
        QuotModule<K> mid = quot_module(amb3, Subspace<K>::span(amb3.dim, std::move(rels)));
        G.push_q = mid.q;
        // pullback condition p_H(h) = Delta_X(x), projected into the quotient
        Matrix<K> cond(ctx.XX.q.dim, amb3.dim);
        for (int j = 0; j < H.at(0).dim; ++j) cond.set_col(Z.dim + j, H.d(0).col(j));
        for (int j = 0; j < X.dim; ++j) {
            Vec<K> c = G.DXmat.col(j);
            for (auto& v : c) v = -v;
            cond.set_col(Z.dim + H.at(0).dim + j, c);
        }
        Subspace<K> ambCond = kernel(cond);
        std::vector<SparseRow<K>> projRows;
        for (const auto& row : ambCond.basis)
            projRows.push_back(to_sparse(mid.q.project(to_dense(row, amb3.dim))));
        G.pullback0 = Subspace<K>::span(mid.q.dim, std::move(projRows));

        G.M = {X, mid.mod, Z};
        G.D.resize(2);
        {
            Matrix<K> d0(X.dim, mid.mod.dim);
            for (int j = 0; j < mid.mod.dim; ++j) {
                Vec<K> lift = mid.q.lift(unit_vec<K>(mid.mod.dim, j));
                for (int i = 0; i < X.dim; ++i) d0(i, j) = lift[Z.dim + H.at(0).dim + i];
            }
            G.D[0] = d0;
        }
        {
            Matrix<K> d1(mid.mod.dim, Z.dim);
            for (int j = 0; j < Z.dim; ++j) {
                Vec<K> v(amb3.dim, K(0));
                v[j] = K(-1);
                d1.set_col(j, mid.q.project(v));
            }
            G.D[1] = d1;
        }
        return G;
    }

    // modules
    Module<K> amb0 = dsum_module(H.at(0), X);
    Module<K> ambTop = dsum_module(Z, H.at(r - 1));
    // pullback subspace: ker [p_H, -Delta_X]
    Matrix<K> cond(ctx.XX.q.dim, amb0.dim);
    for (int j = 0; j < H.at(0).dim; ++j) cond.set_col(j, H.d(0).col(j));
    for (int j = 0; j < X.dim; ++j) {
        Vec<K> c = G.DXmat.col(j);
        for (auto& v : c) v = -v;
        cond.set_col(H.at(0).dim + j, c);
    }
    G.pullback0 = kernel(cond);
    // pushout: (Z (+) H_{r-1}) / {(mu w, i_H w)}
    std::vector<SparseRow<K>> rels;
    for (int w = 0; w < ctx.ZZ.q.dim; ++w) {
        Vec<K> row(ambTop.dim, K(0));
        Vec<K> mw = G.muq.col(w);
        Vec<K> iw = H.d(r).col(w);
        for (int i = 0; i < Z.dim; ++i) row[i] = mw[i];
        for (int i = 0; i < H.at(r - 1).dim; ++i) row[Z.dim + i] = iw[i];
        auto sp = to_sparse(row);
        if (!sp.empty()) rels.push_back(std::move(sp));
    }
    QuotModule<K> push = quot_module(ambTop, Subspace<K>::span(ambTop.dim, std::move(rels)));
    G.push_q = push.q;

    G.M.push_back(X);
    G.M.push_back(amb0);
    for (int k = 1; k <= r - 2; ++k) G.M.push_back(H.at(k));
    G.M.push_back(push.mod);
    G.M.push_back(Z);

    // differentials
    G.D.resize(r + 1);
    {  // pr_X out of degree 0
        Matrix<K> pr(X.dim, amb0.dim);
        for (int i = 0; i < X.dim; ++i) pr(i, H.at(0).dim + i) = K(1);
        G.D[0] = pr;
    }
    auto into0 = [&](const Matrix<K>& hpart) {  // (h, 0) embedding
        Matrix<K> m(amb0.dim, hpart.cols());
        for (int rr = 0; rr < hpart.rows(); ++rr)
            for (int c = 0; c < hpart.cols(); ++c) m(rr, c) = hpart(rr, c);
        return m;
    };
    auto fromPush = [&](int targetDim, const Matrix<K>& dH) {
        // class(z, h) |-> dH(h), well-defined since dH o i_H = 0
        Matrix<K> m(targetDim, push.mod.dim);
        for (int j = 0; j < push.mod.dim; ++j) {
            Vec<K> lift = G.push_q.lift(unit_vec<K>(push.mod.dim, j));
            Vec<K> h(H.at(r - 1).dim);
            for (int i = 0; i < H.at(r - 1).dim; ++i) h[i] = lift[Z.dim + i];
            m.set_col(j, dH.apply(h));
        }
        return m;
    };
    if (r == 2) {
        G.D[1] = into0(fromPush(H.at(0).dim, H.d(1)));
    } else {
        G.D[1] = into0(H.d(1));
        for (int k = 2; k <= r - 2; ++k) G.D[k] = H.d(k);
        G.D[r - 1] = fromPush(H.at(r - 2).dim, H.d(r - 1));
    }
    {  // top: z |-> class(-z, 0)
        Matrix<K> m(push.mod.dim, Z.dim);
        for (int j = 0; j < Z.dim; ++j) {
            Vec<K> v(ambTop.dim, K(0));
            v[j] = K(-1);
            m.set_col(j, G.push_q.project(v));
        }
        G.D[r] = m;
    }
    return G;
}

// project (0, h) into the pushout (degree r-1 of G)
template <class K>
Matrix<K> push_h(const HashMuDelta<K>& G, int zdim, const Matrix<K>& h) {
    Matrix<K> m(G.push_q.dim, h.cols());
    for (int c = 0; c < h.cols(); ++c) {
        Vec<K> v(G.push_q.ambient_dim, K(0));
        for (int i = 0; i < h.rows(); ++i) v[zdim + i] = h(i, c);
        m.set_col(c, G.push_q.project(v));
    }
    return m;
}

/*
 * Phi: collections Bar_k(U, X (x) X) -> H_k become collections
 * Bar_k(U, X) -> G_k by precomposing with id (x) Delta_X, pairing with zero
 * in degree 0, projecting into the pushout in degree r-1, and spli
 * postcomposing with mu on top.
 */
// project an H-part-only map into the merged degree-0 quotient
template <class K>
Matrix<K> merged_h(const OperadContext<K>& ctx, const HashMuDelta<K>& G, const Matrix<K>& h) {
    int zdim = ctx.C.Z.mod.dim;
    Matrix<K> m(G.push_q.dim, h.cols());
    for (int c = 0; c < h.cols(); ++c) {
        Vec<K> v(G.push_q.ambient_dim, K(0));
        for (int i = 0; i < h.rows(); ++i) v[zdim + i] = h(i, c);
        m.set_col(c, G.push_q.project(v));
    }
    return m;
}

template <class K>
GradedMaps<K> phi_transfer(const OperadContext<K>& ctx, const HashMuDelta<K>& G,
                           const GradedMaps<K>& xi) {
    int r = G.r;
    int zdim = ctx.C.Z.mod.dim;
    GradedMaps<K> out;
    out.top = r;
    out.comp.push_back(Matrix<K>(ctx.C.X.mod.dim, ctx.C.X.mod.dim));  // 0 at degree -1
    if (G.merged) {
        out.comp.push_back(merged_h(ctx, G, xi.at(0) * G.DXbar[0]));
        out.comp.push_back(G.muq * (xi.at(1) * G.DXbar[1]));
        return out;
    }
    for (int k = 0; k <= r; ++k) {
        Matrix<K> pre = xi.at(k) * G.DXbar[k];
        if (k == 0) {
            Matrix<K> m(G.at(0).dim, pre.cols());
            for (int rr = 0; rr < pre.rows(); ++rr)
                for (int c = 0; c < pre.cols(); ++c) m(rr, c) = pre(rr, c);
            out.comp.push_back(m);
        } else if (k <= r - 2) {
            out.comp.push_back(pre);
        } else if (k == r - 1) {
            out.comp.push_back(push_h(G, zdim, pre));
        } else {
            out.comp.push_back(G.muq * pre);
        }
    }
    return out;
}

// Psi: degree-raising collections transfer the same way, shifted by one.
template <class K>
GradedMaps<K> psi_transfer(const OperadContext<K>& ctx, const HashMuDelta<K>& G,
                           const GradedMaps<K>& nu) {
    int r = G.r;
    int zdim = ctx.C.Z.mod.dim;
    GradedMaps<K> out;  // out.at(k): Bar_k(U,X) -> G_{k+1}, k = -1..r-1
    out.top = r - 1;
    if (G.merged) {
        out.comp.push_back(merged_h(ctx, G, nu.at(-1) * G.DXmat));
        out.comp.push_back(G.muq * (nu.at(0) * G.DXbar[0]));
        return out;
    }
    {
        // degree -1: (nu_{-1} o Delta_X, 0) into G_0
        Matrix<K> pre = nu.at(-1) * G.DXmat;
        Matrix<K> m(G.at(0).dim, pre.cols());
        for (int rr = 0; rr < pre.rows(); ++rr)
            for (int c = 0; c < pre.cols(); ++c) m(rr, c) = pre(rr, c);
        out.comp.push_back(m);
    }
    for (int k = 0; k <= r - 1; ++k) {
        Matrix<K> pre = nu.at(k) * G.DXbar[k];
        if (k <= r - 3) out.comp.push_back(pre);
        else if (k == r - 2) out.comp.push_back(push_h(G, zdim, pre));
        else out.comp.push_back(G.muq * pre);
    }
    return out;
}

/*
 * Everything computed once per (E, F) pipeline instance.
 */
template <class K>
struct TransferSetup {
    const OperadContext<K>* ctx = nullptr;
    Extension<K> E, F;
    GradedMaps<K> phi, psi;  // cocycle representatives over the identity
    MolochComplex<K> ME, MF;
    SpliceComplex<K> S1;  // (E (x) Z)#(X (x) F)
    SpliceComplex<K> S4;  // (Z (x) E)#(F (x) X)
    std::vector<Matrix<K>> lamEF;  // ME -> S1
    std::vector<Matrix<K>> rhoFE;  // MF -> S4
    std::vector<Matrix<K>> stEF;   // S4 -> S1
    HashMuDelta<K> G;              // mu # S1 # Delta_X
    std::vector<Matrix<K>> tauk;   // tau on Bar_k(U,XX), k = 0..p+q

    int p() const { return E.length; }
    int q() const { return F.length; }

    Cochain<K> phiC(int j) const {
        return Cochain<K>{j, (j == E.length) ? &ctx->C.Z.mod : &E.at(j), phi.at(j)};
    }
    Cochain<K> psiC(int i) const {
        return Cochain<K>{i, (i == F.length) ? &ctx->C.Z.mod : &F.at(i), psi.at(i)};
    }
};

template <class K>
std::unique_ptr<TransferSetup<K>> make_transfer_setup(const OperadContext<K>& ctx,
                                                      ExtensionWithRep<K> Ew,
                                                      ExtensionWithRep<K> Fw) {
    auto out = std::make_unique<TransferSetup<K>>();
    TransferSetup<K>& T = *out;
    T.ctx = &ctx;
    T.E = std::move(Ew.ext);
    T.F = std::move(Fw.ext);
    T.phi.top = T.E.length;
    T.phi.comp = std::move(Ew.rep);
    T.psi.top = T.F.length;
    T.psi.comp = std::move(Fw.rep);
    T.ME = moloch(ctx, T.E, T.F);
    T.MF = moloch(ctx, T.F, T.E);
    T.S1 = splice_EZ_XF(ctx, T.E, T.F);
    T.S4 = splice_ZF_EX(ctx, T.F, T.E);
    T.lamEF = lambda_edge(ctx, T.E, T.F, T.ME, T.S1);
    T.rhoFE = rho_edge(ctx, T.F, T.E, T.MF, T.S4);
    T.stEF = sigma_tau(ctx, T.E, T.F, T.S4, T.S1);
    T.G = hash_mu_delta(ctx, T.S1);
    ctx.barXX.ensure(T.E.length + T.F.length);
    for (int k = 0; k <= T.E.length + T.F.length; ++k) T.tauk.push_back(tau_bar(ctx, k));
    return out;
}

// (phi u_(x) psi)_k summed over blocks of Moloch(E,F), with tau in degree -1
template <class K>
GradedMaps<K> external_cup_collection(const TransferSetup<K>& T, bool swapped) {
    const auto& ctx = *T.ctx;
    const MolochComplex<K>& M = swapped ? T.MF : T.ME;
    int p = T.p(), q = T.q();
    GradedMaps<K> out;
    out.top = p + q;
    out.comp.push_back(ctx.tauXX);
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> acc(M.at(k).dim, ctx.barXX.dim(k));
        for (auto [i, j] : M.blocksAt[k]) {
            // block (i, j) of Moloch(first, second): first_i (x) second_j
            Cochain<K> a = swapped ? T.psiC(i) : T.phiC(i);
            Cochain<K> b = swapped ? T.phiC(j) : T.psiC(j);
            Cochain<K> cupAB = external_cup(ctx, a, b, M.block.at({i, j}));
            acc += M.embed(k, i, j, cupAB.mat);
        }
        out.comp.push_back(acc);
    }
    return out;
}

/*
 * epsilon(phi, psi): the explicit 0-twisted correction into Moloch(F, E):
 * zero below p, the braided commutator plus the (-1)^{pk+k+1}-signed
 * (F (x) i_E)-pushforward of the external Gerstenhaber product in the middle
 * band, minus the top commutator at p+q.
 */
template <class K>
GradedMaps<K> epsilon_correction(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    int p = T.p(), q = T.q();
    GradedMaps<K> out;
    out.top = p + q;
    out.comp.push_back(Matrix<K>(ctx.XX.q.dim, ctx.XX.q.dim));  // 0 in degree -1
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> acc(T.MF.at(k).dim, ctx.barXX.dim(k));
        if (k >= p && k <= p + q - 1) {
            const UTensor<K>& FZ = T.MF.block.at({k - p, p});
            auto ZF = tensor_modules(*ctx.B, ctx.C.Z.mod, T.F.at(k - p));
            Cochain<K> comm = braided_cup_commutator(ctx, T.psiC(k - p), T.phiC(p), FZ, ZF);
            acc -= T.MF.embed(k, k - p, p, comm.mat);

            auto FZ1 = tensor_modules(*ctx.B, T.F.at(k - p + 1), ctx.C.Z.mod);
            Cochain<K> prod = external_gerstenhaber_product(ctx, T.psiC(k - p + 1), T.phiC(p), FZ1);
            Matrix<K> pushed = tensor_map(FZ1, T.MF.block.at({k - p + 1, p - 1}),
                                          Matrix<K>::identity(T.F.at(k - p + 1).dim), T.E.d(p)) *
                               prod.mat;
            if ((p * k + k + 1) % 2 == 0) acc += T.MF.embed(k, k - p + 1, p - 1, pushed);
            else acc -= T.MF.embed(k, k - p + 1, p - 1, pushed);
        } else if (k == p + q) {
            const UTensor<K>& FZ = T.MF.block.at({q, p});
            auto ZF = tensor_modules(*ctx.B, ctx.C.Z.mod, T.F.at(q));
            Cochain<K> comm = braided_cup_commutator(ctx, T.psiC(q), T.phiC(p), FZ, ZF);
            acc -= T.MF.embed(k, q, p, comm.mat);
        }
        out.comp.push_back(acc);
    }
    return out;
}

// xi(phi, psi) into (E (x) Z)#(X (x) F)
template <class K>
GradedMaps<K> xi_collection(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    int p = T.p(), q = T.q();
    GradedMaps<K> out;
    out.top = p + q;
    out.comp.push_back(Matrix<K>(ctx.XX.q.dim, ctx.XX.q.dim));
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> acc(T.S1.at(k).dim, ctx.barXX.dim(k));
        if (k >= q && k <= p + q - 2) {
            auto ZE = tensor_modules(*ctx.B, ctx.C.Z.mod, T.E.at(k - q));
            Cochain<K> comm = braided_cup_commutator(ctx, T.phiC(k - q), T.psiC(q),
                                                     T.S1.fac(k), ZE);
            acc += comm.mat;
        } else if (k == p + q - 1) {
            auto ZE = tensor_modules(*ctx.B, ctx.C.Z.mod, T.E.at(p - 1));
            Cochain<K> comm = braided_cup_commutator(ctx, T.phiC(p - 1), T.psiC(q),
                                                     T.S1.fac(k), ZE);
            acc += comm.mat;
            Cochain<K> prod = external_gerstenhaber_product(ctx, T.psiC(q), T.phiC(p), ctx.ZZ);
            Matrix<K> pushed =
                tensor_map(ctx.ZZ, T.S1.fac(k), T.E.d(p), Matrix<K>::identity(ctx.C.Z.mod.dim)) *
                prod.mat;
            // sign (-1)^{p+1}: forced by [d,s] = xi together with the
            // pushout comparison against eta (the (-1)^{p+q} variant fails
            // for even q)
            if ((p + 1) % 2 == 0) acc += pushed;
            else acc -= pushed;
        }
        out.comp.push_back(acc);
    }
    return out;
}

// s(phi, psi): degree +1 homotopy with [d, s] = xi
template <class K>
GradedMaps<K> s_collection(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    int p = T.p(), q = T.q();
    GradedMaps<K> out;  // out.at(k): Bar_k(U,XX) -> S1_{k+1}, k = -1..p+q-1
    out.top = p + q - 1;
    out.comp.push_back(Matrix<K>(T.S1.at(0).dim, ctx.XX.q.dim));
    for (int k = 0; k <= p + q - 1; ++k) {
        Matrix<K> acc(T.S1.at(k + 1).dim, ctx.barXX.dim(k));
        if (k >= q && k <= p + q - 2) {
            // sign -(-1)^{q(k+1)}: the global minus is forced by the k = q
            // case [d,s]_q = [phi_0, psi_q] via sahnejoghurt1
            Cochain<K> prod =
                external_gerstenhaber_product(ctx, T.phiC(k - q + 1), T.psiC(q), T.S1.fac(k + 1));
            if ((q * (k + 1)) % 2 == 0) acc -= prod.mat;
            else acc += prod.mat;
        } else if (k == p + q - 1) {
            // (-1)^{p+1} [psi_q, phi_p]^{obar}, matching the corrected xi
            Cochain<K> a = external_gerstenhaber_product(ctx, T.psiC(q), T.phiC(p), ctx.ZZ);
            Cochain<K> b = external_gerstenhaber_product(ctx, T.phiC(p), T.psiC(q), ctx.ZZ);
            Matrix<K> commutator = a.mat;
            if (((p - 1) * (q - 1)) % 2 == 0) commutator -= b.mat;
            else commutator += b.mat;
            if ((p + 1) % 2 != 0) commutator = -commutator;
            acc += commutator;
        }
        out.comp.push_back(acc);
    }
    return out;
}

// eta(phi, psi) by its definition:
// lambda_{E,F}((phi u psi) o tau) - (sigma|tau)_{E,F} o rho_{F,E}(psi u phi + eps)
template <class K>
GradedMaps<K> eta_collection(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    int p = T.p(), q = T.q();
    GradedMaps<K> cupEF = external_cup_collection(T, false);
    GradedMaps<K> cupFE = external_cup_collection(T, true);
    GradedMaps<K> eps = epsilon_correction(T);
    GradedMaps<K> out;
    out.top = p + q;
    // degree -1: tau o tau - tau o (tau + 0) = 0
    out.comp.push_back(T.lamEF[0] * (cupEF.at(-1) * ctx.tauXX) -
                       T.stEF[0] * (T.rhoFE[0] * (cupFE.at(-1) + eps.at(-1))));
    for (int k = 0; k <= p + q; ++k) {
        Matrix<K> a = T.lamEF[k + 1] * (cupEF.at(k) * T.tauk[k]);
        Matrix<K> b = T.stEF[k + 1] * (T.rhoFE[k + 1] * (cupFE.at(k) + eps.at(k)));
        out.comp.push_back(a - b);
    }
    return out;
}

// [d, s]: Bar_k -> S1_k
template <class K>
GradedMaps<K> commutator_d_s(const TransferSetup<K>& T, const GradedMaps<K>& s) {
    const auto& ctx = *T.ctx;
    int top = T.p() + T.q();
    GradedMaps<K> out;
    out.top = top;
    // degree -1: d o s_{-1} (s_{-2} = 0)
    out.comp.push_back(T.S1.d(0) * s.at(-1));
    for (int k = 0; k <= top; ++k) {
        Matrix<K> m(T.S1.at(k).dim, ctx.barXX.dim(k));
        if (k <= top - 1) m += T.S1.d(k + 1) * s.at(k);
        m += s.at(k - 1) * ctx.barXX.d(k);
        out.comp.push_back(m);
    }
    return out;
}

// [d, Psi(nu)]: Bar_k(U,X) -> G_k
template <class K>
GradedMaps<K> commutator_d_psi(const OperadContext<K>& ctx, const HashMuDelta<K>& G,
                               const GradedMaps<K>& psiNu) {
    GradedMaps<K> out;
    out.top = G.r;
    out.comp.push_back(G.d(0) * psiNu.at(-1));
    for (int k = 0; k <= G.r; ++k) {
        Matrix<K> m(G.at(k).dim, ctx.barX.dim(k));
        if (k <= G.r - 1) m += G.d(k + 1) * psiNu.at(k);
        m += psiNu.at(k - 1) * ctx.barX.d(k);
        out.comp.push_back(m);
    }
    return out;
}

// the constant collection (0, ..., 0, (0,L), id_X)
template <class K>
GradedMaps<K> constant_representative(const OperadContext<K>& ctx, const HashMuDelta<K>& G) {
    GradedMaps<K> out;
    out.top = G.r;
    out.comp.push_back(Matrix<K>::identity(ctx.C.X.mod.dim));
    const Matrix<K>& L = ctx.barX.d(0);
    if (G.merged) {
        // class(0, 0, L)
        Matrix<K> m(G.at(0).dim, ctx.barX.dim(0));
        int off = G.push_q.ambient_dim - ctx.C.X.mod.dim;
        for (int j = 0; j < L.cols(); ++j) {
            Vec<K> v(G.push_q.ambient_dim, K(0));
            for (int i = 0; i < L.rows(); ++i) v[off + i] = L(i, j);
            m.set_col(j, G.push_q.project(v));
        }
        out.comp.push_back(m);
    } else {
        Matrix<K> m(G.at(0).dim, ctx.barX.dim(0));
        int off = G.at(0).dim - ctx.C.X.mod.dim;
        for (int i = 0; i < L.rows(); ++i)
            for (int j = 0; j < L.cols(); ++j) m(off + i, j) = L(i, j);
        out.comp.push_back(m);
    }
    for (int k = 1; k <= G.r; ++k)
        out.comp.push_back(Matrix<K>(G.at(k).dim, ctx.barX.dim(k)));
    return out;
}

/*
 * The cocycle representative for E u F: constant part plus
 * Phi(lambda((phi u_(x) psi) o tau)). Its top component reproduces the
 * internal cup product.
 */
template <class K>
GradedMaps<K> cup_representative(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    GradedMaps<K> cupEF = external_cup_collection(T, false);
    GradedMaps<K> lam;
    lam.top = T.p() + T.q();
    lam.comp.push_back(T.lamEF[0] * (cupEF.at(-1) * ctx.tauXX));
    for (int k = 0; k <= lam.top; ++k)
        lam.comp.push_back(T.lamEF[k + 1] * (cupEF.at(k) * T.tauk[k]));
    GradedMaps<K> out = phi_transfer(ctx, T.G, lam);
    GradedMaps<K> cst = constant_representative(ctx, T.G);
    for (int k = -1; k <= out.top; ++k) out.at(k) += cst.at(k);
    return out;
}

// {phi, psi} := (-1)^{pq} Psi_{p+q-1}(s(phi,psi)) read off in top degree
template <class K>
Cochain<K> bracket_from_homotopy(const TransferSetup<K>& T) {
    const auto& ctx = *T.ctx;
    GradedMaps<K> s = s_collection(T);
    GradedMaps<K> Ps = psi_transfer(ctx, T.G, s);
    Matrix<K> m = Ps.at(T.p() + T.q() - 1);
    // prefactor (-1)^{pq+q+1}, the companion of the corrected s-top sign;
    // reduces to the familiar (-1)^{pq} for odd q
    int p = T.p(), q = T.q();
    if ((p * q + q + 1) % 2 != 0) m = -m;
    return Cochain<K>{p + q - 1, &ctx.C.Z.mod, m};
}

// residuals of a graded collection against the bar differential over XX
template <class K>
ValidationReport check_collection_chain(const OperadContext<K>& ctx,
                                        const std::vector<Matrix<K>>& dC,
                                        const GradedMaps<K>& f, int top) {
    ValidationReport rep;
    for (int k = 0; k <= top; ++k) {
        Matrix<K> lhs = dC[k] * f.at(k);
        Matrix<K> rhs = f.at(k - 1) * ctx.barXX.d(k);
        if (lhs != rhs) rep.fail("chain-map", "degree " + std::to_string(k));
    }
    return rep;
}

/*
 * The whole extension-loop verification for one (p, q) instance: epsilon is
 * a chain map, xi = [d, s], Phi(eta) = Phi(xi) = [d, Psi(s)], and the
 * extension-derived cup representative is a chain map whose top component is
 * the internal cup product computed operadically.
 */
template <class K>
ValidationReport verify_extension_loop(const OperadContext<K>& ctx, const TransferSetup<K>& T) {
    ValidationReport rep;
    int p = T.p(), q = T.q();

    // the two inputs really are cocycle representatives
    for (int k = 0; k <= p; ++k)
        if (T.E.d(k) * T.phi.at(k) != T.phi.at(k - 1) * ctx.barX.d(k))
            rep.fail("phi-chain-map", std::to_string(k));
    for (int k = 0; k <= q; ++k)
        if (T.F.d(k) * T.psi.at(k) != T.psi.at(k - 1) * ctx.barX.d(k))
            rep.fail("psi-chain-map", std::to_string(k));

    // phi u_(x) psi is a tau-twisted representative (lem. maywestart)
    GradedMaps<K> cupEF = external_cup_collection(T, false);
    rep.merge(check_collection_chain(ctx, T.ME.D, cupEF, p + q), "cup-collection");

    // epsilon is a chain map into Moloch(F, E) with vanishing degree -1
    GradedMaps<K> eps = epsilon_correction(T);
    if (!eps.at(-1).is_zero()) rep.fail("epsilon-degree-minus-one", "");
    rep.merge(check_collection_chain(ctx, T.MF.D, eps, p + q), "epsilon");

    // xi = [d, s]
    GradedMaps<K> xi = xi_collection(T);
    GradedMaps<K> s = s_collection(T);
    GradedMaps<K> ds = commutator_d_s(T, s);
    for (int k = -1; k <= p + q; ++k)
        if (xi.at(k) != ds.at(k)) rep.fail("xi-equals-ds", "degree " + std::to_string(k));

    // Phi(eta) = Phi(xi)
    GradedMaps<K> eta = eta_collection(T);
    GradedMaps<K> PhiEta = phi_transfer(ctx, T.G, eta);
    GradedMaps<K> PhiXi = phi_transfer(ctx, T.G, xi);
    for (int k = -1; k <= T.G.r; ++k)
        if (PhiEta.at(k) != PhiXi.at(k)) rep.fail("phi-eta-equals-phi-xi", std::to_string(k));

    // Phi(eta) = [d, Psi(s)]
    GradedMaps<K> Ps = psi_transfer(ctx, T.G, s);
    GradedMaps<K> dPs = commutator_d_psi(ctx, T.G, Ps);
    for (int k = -1; k <= T.G.r; ++k)
        if (PhiEta.at(k) != dPs.at(k)) rep.fail("phi-eta-equals-d-psi-s", std::to_string(k));

    // cup representative: chain map, degree-0 membership, top = internal cup
    GradedMaps<K> rep_cup = cup_representative(T);
    for (int k = 0; k <= T.G.r; ++k) {
        Matrix<K> lhs = T.G.d(k) * rep_cup.at(k);
        Matrix<K> rhs = rep_cup.at(k - 1) * ctx.barX.d(k);
        if (lhs != rhs) rep.fail("cup-rep-chain-map", std::to_string(k));
    }
    for (int c = 0; c < rep_cup.at(0).cols(); ++c)
        if (!T.G.pullback0.contains(rep_cup.at(0).col(c))) {
            rep.fail("cup-rep-pullback-membership", "column " + std::to_string(c));
            break;
        }
    Cochain<K> cupOp = cup(ctx, T.phiC(p), T.psiC(q));
    Cochain<K> cupDirect = cup_direct(ctx, T.phiC(p), T.psiC(q));
    if (rep_cup.at(T.G.r) != cupOp.mat) rep.fail("cup-rep-top-vs-operad", "");
    if (rep_cup.at(T.G.r) != cupDirect.mat) rep.fail("cup-rep-top-vs-closed-form", "");

    // bracket from the homotopy equals the operadic bracket
    Cochain<K> brH = bracket_from_homotopy(T);
    Cochain<K> brO = bracket(ctx, T.phiC(p), T.psiC(q));
    if (brH.mat != brO.mat) rep.fail("bracket-from-homotopy", "");

    return rep;
}

} // namespace gext
