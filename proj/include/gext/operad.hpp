#pragma once

#include <functional>
#include <map>

#include "gext/bar.hpp"

namespace gext {

/*
 * Everything needed to evaluate the composition-type operations on
 * C^*(U, X, -) and C^*(U, X (x)_A X, -): the bar ladders over X and over
 * X (x)_A X, the coefficient pair, and the distinguished cochains
 * mu(u0,u1,u2,m) = eps_X(u0 u1 u2 m) |> 1_Z, its unary and nullary cousins.
 */
template <class K>
struct OperadContext {
    // Cochains hold pointers into this context, so it lives at a fixed
    // address: create through make_operad_context and never copy.
    OperadContext() = default;
    OperadContext(const OperadContext&) = delete;
    OperadContext& operator=(const OperadContext&) = delete;

    const LeftBialgebroid<K>* B = nullptr;
    CoefficientPair<K> C;
    UTensor<K> XX;               // X (x)_A X
    mutable BarLadder<K> barX;   // over X; grown on demand, a logical cache
    mutable BarLadder<K> barXX;  // over XX.mod
    UTensor<K> ZZ;       // Z (x)_A Z
    Matrix<K> tauXX;     // tau_{X,X}: XX -> XX
    Matrix<K> sigmaZZ;   // sigma_{Z,Z}: ZZ -> ZZ
    Cochain<K> mu, one, e;

    mutable std::map<int, CochainSpace<K>> spaceX_;   // target Z over barX
    mutable std::map<int, CochainSpace<K>> spaceXX_;  // target Z over barXX

    const CochainSpace<K>& space(int n) const {
        auto it = spaceX_.find(n);
        if (it == spaceX_.end()) {
            barX.ensure(n);
            it = spaceX_.emplace(n, cochain_space(barX, n, C.Z.mod)).first;
        }
        return it->second;
    }

    Vec<K> prod_legs(const std::vector<int>& legs, int from, int to) const {
        Vec<K> r = B->U.unit;
        for (int s = from; s < to; ++s) r = B->U.mul(r, unit_vec<K>(B->U.dim, legs[s]));
        return r;
    }
};

template <class K>
std::unique_ptr<OperadContext<K>> make_operad_context(const LeftBialgebroid<K>& B,
                                                      CoefficientPair<K> C,
                                                      ResourceLimits limits = {}) {
    auto out = std::make_unique<OperadContext<K>>();
    OperadContext<K>& ctx = *out;
    ctx.B = &B;
    ctx.C = std::move(C);
    ctx.XX = tensor_modules(B, ctx.C.X.mod, ctx.C.X.mod);
    ctx.ZZ = tensor_modules(B, ctx.C.Z.mod, ctx.C.Z.mod);
    ctx.barX.init(&B, ctx.C.X.mod, limits);
    ctx.barXX.init(&B, ctx.XX.mod, limits);
    ctx.tauXX = braiding_tau(B, ctx.C.X.mod, ctx.C.X, ctx.XX, ctx.XX);
    ctx.sigmaZZ = braiding_sigma(B, ctx.C.Z, ctx.C.Z.mod, ctx.ZZ, ctx.ZZ);

    ctx.barX.ensure(2);
    if (!ctx.C.X.has_comonoid || !ctx.C.Z.has_monoid) {
        // braiding-only contexts (no operad structure): distinguished
        // elements stay zero and the composition operations stay unavailable
        ctx.mu = zero_cochain(ctx.barX, 2, ctx.C.Z.mod);
        ctx.one = zero_cochain(ctx.barX, 1, ctx.C.Z.mod);
        ctx.e = zero_cochain(ctx.barX, 0, ctx.C.Z.mod);
        return out;
    }
    auto distinguished = [&](int n) {
        Matrix<K> m(ctx.C.Z.mod.dim, ctx.barX.dim(n));
        for (int j = 0; j < ctx.barX.dim(n); ++j) {
            std::vector<int> tup = ctx.barX.tuple(n, j);
            Vec<K> u = unit_vec<K>(B.U.dim, tup[0]);
            for (int s = 1; s <= n; ++s) u = B.U.mul(u, unit_vec<K>(B.U.dim, tup[s]));
            Vec<K> w = ctx.C.X.mod.apply(u, unit_vec<K>(ctx.C.X.mod.dim, tup[n + 1]));
            m.set_col(j, ctx.C.Z.mod.apply(B.s_of(ctx.C.X.counit.apply(w)), ctx.C.Z.one));
        }
        return Cochain<K>{n, &ctx.C.Z.mod, m};
    };
    ctx.mu = distinguished(2);
    ctx.one = distinguished(1);
    ctx.e = distinguished(0);
    return out;
}

namespace detail {

// iterate over all Delta-leg choices of the listed U-basis indices
template <class K, class F>
void for_each_leg_choice(const LeftBialgebroid<K>& B, const std::vector<int>& us, F&& fn) {
    size_t n = us.size();
    for (size_t s = 0; s < n; ++s)
        if (B.delta[us[s]].empty()) return;
    std::vector<size_t> idx(n, 0);
    std::vector<int> l1(n), l2(n);
    while (true) {
        K c(1);
        for (size_t s = 0; s < n; ++s) {
            const auto& lg = B.delta[us[s]][idx[s]];
            c *= lg.c;
            l1[s] = lg.a;
            l2[s] = lg.b;
        }
        fn(c, l1, l2);
        size_t s = 0;
        for (; s < n; ++s) {
            if (++idx[s] < B.delta[us[s]].size()) break;
            idx[s] = 0;
        }
        if (s == n) break;
    }
}

template <class K>
Vec<K> eval_cochain(const BarLadder<K>& bar, const Cochain<K>& c, const std::vector<Vec<K>>& uSlots,
                    const Vec<K>& w) {
    return c.mat.apply(bar.project(c.degree, uSlots, w));
}

} // namespace detail

/*
 * External cup product (phi_j into E) x (psi_i into F) -> cochain on
 * Bar(U, X (x) X) into E (x)_A F:
 *
 *   (phi (u) psi)(u^0..u^{j+i}, m (x) m') =
 *      phi(u^0_(1)..u^j_(1), (u^{j+1}_(2)...u^{j+i}_(2) m')_[0])
 *      (x)_A psi(u^0_(2)...u^j_(2) (...)_[1], u^{j+1}_(1)..u^{j+i}_(1), m).
 */
template <class K>
Cochain<K> external_cup(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi,
                        const UTensor<K>& EF) {
    const auto& B = *ctx.B;
    int j = phi.degree, i = psi.degree, k = j + i;
    ctx.barXX.ensure(k);
    ctx.barX.ensure(std::max(j, i));
    int dimX = ctx.C.X.mod.dim;
    Matrix<K> out(EF.q.dim, ctx.barXX.dim(k));
    for (int col = 0; col < ctx.barXX.dim(k); ++col) {
        std::vector<int> tup = ctx.barXX.tuple(k, col);
        int wAmb = ctx.XX.q.rep_index[tup[k + 1]];
        int m = wAmb / dimX, mp = wAmb % dimX;
        Vec<K> acc(EF.q.dim, K(0));
        std::vector<int> us(tup.begin(), tup.begin() + k + 1);
        detail::for_each_leg_choice(B, us, [&](const K& c0, const std::vector<int>& l1,
                                               const std::vector<int>& l2) {
            Vec<K> Y = ctx.C.X.mod.apply(ctx.prod_legs(l2, j + 1, k + 1), unit_vec<K>(dimX, mp));
            for (const auto& rl : ctx.C.X.coact_of(Y)) {
                std::vector<Vec<K>> phiSlots;
                for (int s = 0; s <= j; ++s) phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                Vec<K> valE = detail::eval_cochain(ctx.barX, phi, phiSlots, unit_vec<K>(dimX, rl.a));
                Vec<K> first = B.U.mul(ctx.prod_legs(l2, 0, j + 1), unit_vec<K>(B.U.dim, rl.b));
                std::vector<Vec<K>> psiSlots{first};
                for (int s = j + 1; s <= k; ++s) psiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                Vec<K> valF = detail::eval_cochain(ctx.barX, psi, psiSlots, unit_vec<K>(dimX, m));
                axpy(acc, c0 * rl.c, EF.project(valE, valF));
            }
        });
        out.set_col(col, acc);
    }
    return Cochain<K>{k, &EF.mod, out};
}

/*
 * Partial external operadic composition (phi_j into E) o^(x)_i (psi_q into Z),
 * a cochain on Bar(U, X (x) X) into E (x)_A Z. Evaluates the inner psi at
 * first argument 1, takes coaction legs of its value, and splices them into
 * position i of phi.
 */
template <class K>
Cochain<K> external_insert(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi,
                           int i, const UTensor<K>& EZ) {
    const auto& B = *ctx.B;
    int j = phi.degree, q = psi.degree, k = j + q - 1;
    if (i < 1 || i > j) throw std::invalid_argument("external_insert: position out of range");
    if (psi.target != &ctx.C.Z.mod)
        throw std::invalid_argument("external_insert: inner cochain must target Z");
    ctx.barXX.ensure(std::max(k, 0));
    ctx.barX.ensure(std::max(j, q));
    int dimX = ctx.C.X.mod.dim, dimZ = ctx.C.Z.mod.dim;
    Matrix<K> out(EZ.q.dim, ctx.barXX.dim(k));
    for (int col = 0; col < ctx.barXX.dim(k); ++col) {
        std::vector<int> tup = ctx.barXX.tuple(k, col);
        int wAmb = ctx.XX.q.rep_index[tup[k + 1]];
        int m = wAmb / dimX, mp = wAmb % dimX;
        Vec<K> acc(EZ.q.dim, K(0));
        std::vector<int> us(tup.begin(), tup.begin() + k + 1);
        detail::for_each_leg_choice(B, us, [&](const K& c0, const std::vector<int>& l1,
                                               const std::vector<int>& l2) {
            Vec<K> Y = ctx.C.X.mod.apply(ctx.prod_legs(l2, i + q, k + 1), unit_vec<K>(dimX, mp));
            for (const auto& rl : ctx.C.X.coact_of(Y)) {
                std::vector<Vec<K>> psiSlots{B.U.unit};
                for (int s = i; s <= i + q - 1; ++s) psiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                Vec<K> valZ = detail::eval_cochain(ctx.barX, psi, psiSlots, unit_vec<K>(dimX, rl.a));
                for (const auto& ll : ctx.C.Z.coact_of(valZ)) {
                    Vec<K> mid = B.U.mul(unit_vec<K>(B.U.dim, ll.a),
                                         B.U.mul(ctx.prod_legs(l2, i, i + q),
                                                 unit_vec<K>(B.U.dim, rl.b)));
                    std::vector<Vec<K>> phiSlots;
                    for (int s = 0; s < i; ++s) phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                    phiSlots.push_back(mid);
                    for (int s = i + q; s <= k; ++s) phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                    Vec<K> valE = detail::eval_cochain(ctx.barX, phi, phiSlots, unit_vec<K>(dimX, m));
                    Vec<K> zOut = ctx.C.Z.mod.apply(ctx.prod_legs(l2, 0, i), unit_vec<K>(dimZ, ll.b));
                    axpy(acc, c0 * rl.c * ll.c, EZ.project(valE, zOut));
                }
            }
        });
        out.set_col(col, acc);
    }
    return Cochain<K>{k, &EZ.mod, out};
}

/*
 * Internal partial operadic composition on O(n) = Hom_U(Bar_n(U,X), Z):
 * phi_p o_i psi_q, both targets Z, using the comultiplication on X and the
 * multiplication on Z.
 */
template <class K>
Cochain<K> insert(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi, int i) {
    const auto& B = *ctx.B;
    int p = phi.degree, q = psi.degree, k = p + q - 1;
    if (i < 1 || i > p) throw std::invalid_argument("insert: position out of range");
    if (phi.target != &ctx.C.Z.mod || psi.target != &ctx.C.Z.mod)
        throw std::invalid_argument("insert: internal composition needs target Z");
    ctx.barX.ensure(std::max({k, p, q}));
    int dimX = ctx.C.X.mod.dim, dimZ = ctx.C.Z.mod.dim;
    Matrix<K> out(dimZ, ctx.barX.dim(k));
    for (int col = 0; col < ctx.barX.dim(k); ++col) {
        std::vector<int> tup = ctx.barX.tuple(k, col);
        int m = tup[k + 1];
        Vec<K> acc(dimZ, K(0));
        std::vector<int> us(tup.begin(), tup.begin() + k + 1);
        detail::for_each_leg_choice(B, us, [&](const K& c0, const std::vector<int>& l1,
                                               const std::vector<int>& l2) {
            for (const auto& cm : ctx.C.X.comul[m]) {  // m_(1) (x) m_(2)
                Vec<K> Y = ctx.C.X.mod.apply(ctx.prod_legs(l2, i + q, k + 1),
                                             unit_vec<K>(dimX, cm.b));
                for (const auto& rl : ctx.C.X.coact_of(Y)) {
                    std::vector<Vec<K>> psiSlots{B.U.unit};
                    for (int s = i; s <= i + q - 1; ++s)
                        psiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                    Vec<K> valZ =
                        detail::eval_cochain(ctx.barX, psi, psiSlots, unit_vec<K>(dimX, rl.a));
                    for (const auto& ll : ctx.C.Z.coact_of(valZ)) {
                        Vec<K> mid = B.U.mul(unit_vec<K>(B.U.dim, ll.a),
                                             B.U.mul(ctx.prod_legs(l2, i, i + q),
                                                     unit_vec<K>(B.U.dim, rl.b)));
                        std::vector<Vec<K>> phiSlots;
                        for (int s = 0; s < i; ++s) phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                        phiSlots.push_back(mid);
                        for (int s = i + q; s <= k; ++s)
                            phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                        Vec<K> valPhi =
                            detail::eval_cochain(ctx.barX, phi, phiSlots, unit_vec<K>(dimX, cm.a));
                        Vec<K> zOut =
                            ctx.C.Z.mod.apply(ctx.prod_legs(l2, 0, i), unit_vec<K>(dimZ, ll.b));
                        axpy(acc, c0 * cm.c * rl.c * ll.c, ctx.C.Z.mul(valPhi, zOut));
                    }
                }
            }
        });
        out.set_col(col, acc);
    }
    return Cochain<K>{k, &ctx.C.Z.mod, out};
}

// insert with the operadic zero conventions: 0 if p = 0 or i > p
template <class K>
Cochain<K> insert_total(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi,
                        int i) {
    int p = phi.degree, q = psi.degree;
    if (p == 0 || i > p || i < 1) {
        ctx.barX.ensure(std::max(p + q - 1, 0));
        return zero_cochain(ctx.barX, std::max(p + q - 1, 0), ctx.C.Z.mod);
    }
    return insert(ctx, phi, psi, i);
}

// full internal composition phi_p o-bar psi_q = sum_i (-1)^{(i-1)(q-1)} phi o_i psi
template <class K>
Cochain<K> gerstenhaber_product(const OperadContext<K>& ctx, const Cochain<K>& phi,
                                const Cochain<K>& psi) {
    int p = phi.degree, q = psi.degree;
    ctx.barX.ensure(std::max(p + q - 1, 0));
    Cochain<K> acc = zero_cochain(ctx.barX, std::max(p + q - 1, 0), ctx.C.Z.mod);
    for (int i = 1; i <= p; ++i) {
        Cochain<K> term = insert(ctx, phi, psi, i);
        if (((i - 1) * (q - 1)) % 2 == 0) acc.mat += term.mat;
        else acc.mat -= term.mat;
    }
    return acc;
}

// full external composition, same signs, zero for j = 0
template <class K>
Cochain<K> external_gerstenhaber_product(const OperadContext<K>& ctx, const Cochain<K>& phi,
                                         const Cochain<K>& psi, const UTensor<K>& EZ) {
    int j = phi.degree, q = psi.degree;
    ctx.barXX.ensure(std::max(j + q - 1, 0));
    Cochain<K> acc{std::max(j + q - 1, 0), &EZ.mod,
                   Matrix<K>(EZ.q.dim, ctx.barXX.dim(std::max(j + q - 1, 0)))};
    for (int i = 1; i <= j; ++i) {
        Cochain<K> term = external_insert(ctx, phi, psi, i, EZ);
        if (((i - 1) * (q - 1)) % 2 == 0) acc.mat += term.mat;
        else acc.mat -= term.mat;
    }
    return acc;
}

// internal cup: phi_p u psi_q = (mu o_2 psi) o_1 phi
template <class K>
Cochain<K> cup(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi) {
    Cochain<K> inner = insert(ctx, ctx.mu, psi, 2);
    return insert(ctx, inner, phi, 1);
}

// internal cup by the closed formula (Eq.-style direct expansion)
template <class K>
Cochain<K> cup_direct(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi) {
    const auto& B = *ctx.B;
    int p = phi.degree, q = psi.degree, k = p + q;
    ctx.barX.ensure(k);
    int dimX = ctx.C.X.mod.dim, dimZ = ctx.C.Z.mod.dim;
    Matrix<K> out(dimZ, ctx.barX.dim(k));
    for (int col = 0; col < ctx.barX.dim(k); ++col) {
        std::vector<int> tup = ctx.barX.tuple(k, col);
        int m = tup[k + 1];
        Vec<K> acc(dimZ, K(0));
        std::vector<int> us(tup.begin(), tup.begin() + k + 1);
        detail::for_each_leg_choice(B, us, [&](const K& c0, const std::vector<int>& l1,
                                               const std::vector<int>& l2) {
            for (const auto& cm : ctx.C.X.comul[m]) {
                Vec<K> Y = ctx.C.X.mod.apply(ctx.prod_legs(l2, p + 1, k + 1),
                                             unit_vec<K>(dimX, cm.b));
                for (const auto& rl : ctx.C.X.coact_of(Y)) {
                    std::vector<Vec<K>> phiSlots;
                    for (int s = 0; s <= p; ++s) phiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                    Vec<K> valPhi =
                        detail::eval_cochain(ctx.barX, phi, phiSlots, unit_vec<K>(dimX, rl.a));
                    Vec<K> first = B.U.mul(ctx.prod_legs(l2, 0, p + 1), unit_vec<K>(B.U.dim, rl.b));
                    std::vector<Vec<K>> psiSlots{first};
                    for (int s = p + 1; s <= k; ++s) psiSlots.push_back(unit_vec<K>(B.U.dim, l1[s]));
                    Vec<K> valPsi =
                        detail::eval_cochain(ctx.barX, psi, psiSlots, unit_vec<K>(dimX, cm.a));
                    axpy(acc, c0 * cm.c * rl.c, ctx.C.Z.mul(valPhi, valPsi));
                }
            }
        });
        out.set_col(col, acc);
    }
    return Cochain<K>{k, &ctx.C.Z.mod, out};
}

// Gerstenhaber bracket {phi,psi} = phi o-bar psi - (-1)^{(p-1)(q-1)} psi o-bar phi
template <class K>
Cochain<K> bracket(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi) {
    Cochain<K> a = gerstenhaber_product(ctx, phi, psi);
    Cochain<K> b = gerstenhaber_product(ctx, psi, phi);
    if (((phi.degree - 1) * (psi.degree - 1)) % 2 == 0) a.mat -= b.mat;
    else a.mat += b.mat;
    return a;
}

// tau_k = id^{(x) k+1} (x) tau_{X,X} on Bar_k(U, X (x) X)
template <class K>
Matrix<K> tau_bar(const OperadContext<K>& ctx, int k) {
    ctx.barXX.ensure(k);
    Matrix<K> out(ctx.barXX.dim(k), ctx.barXX.dim(k));
    for (int col = 0; col < ctx.barXX.dim(k); ++col) {
        std::vector<int> tup = ctx.barXX.tuple(k, col);
        std::vector<Vec<K>> slots;
        for (int s = 0; s <= k; ++s) slots.push_back(unit_vec<K>(ctx.B->U.dim, tup[s]));
        out.set_col(col, ctx.barXX.project(k, slots, ctx.tauXX.col(tup[k + 1])));
    }
    return out;
}

/*
 * Doubly braided cup commutator
 *   [phi_j, psi_q] = (phi u_(x) psi) o tau_{j+q} - (-1)^{jq} sigma o (psi u_(x) phi),
 * landing in E (x)_A Z; the second argument must target Z.
 */
template <class K>
Cochain<K> braided_cup_commutator(const OperadContext<K>& ctx, const Cochain<K>& phi,
                                  const Cochain<K>& psi, const UTensor<K>& EZ,
                                  const UTensor<K>& ZE) {
    if (psi.target != &ctx.C.Z.mod)
        throw std::invalid_argument("braided_cup_commutator: second argument must target Z");
    int j = phi.degree, q = psi.degree;
    Cochain<K> a = external_cup(ctx, phi, psi, EZ);
    a.mat = a.mat * tau_bar(ctx, j + q);
    Cochain<K> b = external_cup(ctx, psi, phi, ZE);
    Matrix<K> sig = braiding_sigma(*ctx.B, ctx.C.Z, *phi.target, ZE, EZ);
    Matrix<K> sb = sig * b.mat;
    if ((j * q) % 2 == 0) a.mat -= sb;
    else a.mat += sb;
    return a;
}

// The coaction rewrite used in the associativity proof:
// (u_(2) m)_[0] (x) (u_(2) m)_[1] (x) (u_(2) m)_[2] u_(1)
//   = (u_(1) m_[0])_[0] (x) (u_(1) m_[0])_[1] (x) u_(2) m_[1].
template <class K>
ValidationReport verify_cortes(const OperadContext<K>& ctx) {
    ValidationReport rep;
    const auto& B = *ctx.B;
    int nU = B.U.dim, nX = ctx.C.X.mod.dim;
    std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> xu{acts_via_t(B, ctx.C.X.mod),
                                                                 B.s_lmul};
    std::pair<std::vector<Matrix<K>>, std::vector<Matrix<K>>> uu{B.t_lmul, B.s_lmul};
    QuotientSpace<K> tri = chain_balanced<K>({nX, nU, nU}, {xu, uu});
    for (int u = 0; u < nU; ++u)
        for (int m = 0; m < nX; ++m) {
            Vec<K> lhs(tri.dim, K(0)), rhs(tri.dim, K(0));
            for (const auto& d : B.delta[u]) {
                Vec<K> y = ctx.C.X.mod.act[d.b].apply(unit_vec<K>(nX, m));
                for (const auto& r1 : ctx.C.X.coact_of(y))
                    for (const auto& r2 : ctx.C.X.coact[r1.a]) {
                        // (y_[0], y_[1], y_[2] u_(1)): r2 is the inner coaction
                        Vec<K> w = B.U.basis_mul(r1.b, d.a);
                        for (int pp = 0; pp < nU; ++pp)
                            if (!w[pp].is_zero())
                                tri.accumulate(lhs, (r2.a * nU + r2.b) * nU + pp,
                                               d.c * r1.c * r2.c * w[pp]);
                    }
                for (const auto& r0 : ctx.C.X.coact[m]) {
                    Vec<K> z = ctx.C.X.mod.act[d.a].apply(unit_vec<K>(nX, r0.a));
                    for (const auto& rz : ctx.C.X.coact_of(z)) {
                        Vec<K> w = B.U.basis_mul(d.b, r0.b);
                        for (int pp = 0; pp < nU; ++pp)
                            if (!w[pp].is_zero())
                                tri.accumulate(rhs, (rz.a * nU + rz.b) * nU + pp,
                                               d.c * r0.c * rz.c * w[pp]);
                    }
                }
            }
            if (lhs != rhs) rep.fail("coaction-rewrite", idx2(u, m));
        }
    return rep;
}

// graded Leibniz for the external cup: delta(phi u psi) = delta phi u psi + (-1)^j phi u delta psi
template <class K>
bool verify_cup_leibniz(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi,
                        const UTensor<K>& EF) {
    int j = phi.degree;
    Cochain<K> lhs = delta(ctx.barXX, external_cup(ctx, phi, psi, EF));
    Cochain<K> r1 = external_cup(ctx, delta(ctx.barX, phi), psi, EF);
    Cochain<K> r2 = external_cup(ctx, phi, delta(ctx.barX, psi), EF);
    Matrix<K> rhs = r1.mat + (j % 2 == 0 ? r2.mat : -r2.mat);
    return lhs.mat == rhs;
}

// Eq. bois-style identities relating the braided commutator to cofaces
template <class K>
bool verify_twist_coface(const OperadContext<K>& ctx, const Cochain<K>& phi, const Cochain<K>& psi,
                         const UTensor<K>& EZ, const UTensor<K>& ZE) {
    int j = phi.degree, q = psi.degree;
    // (phi u_(x) psi) o tau_{j+q} = (delta_{j+1} phi) o^(x)_{j+1} psi
    Cochain<K> lhs1 = external_cup(ctx, phi, psi, EZ);
    lhs1.mat = lhs1.mat * tau_bar(ctx, j + q);
    Cochain<K> rhs1 = external_insert(ctx, coface(ctx.barX, phi, j + 1), psi, j + 1, EZ);
    if (lhs1.mat != rhs1.mat) return false;
    // sigma o (psi u_(x) phi) = (delta_0 phi) o^(x)_1 psi
    Cochain<K> b = external_cup(ctx, psi, phi, ZE);
    Matrix<K> sig = braiding_sigma(*ctx.B, ctx.C.Z, *phi.target, ZE, EZ);
    Cochain<K> rhs2 = external_insert(ctx, coface(ctx.barX, phi, 0), psi, 1, EZ);
    return sig * b.mat == rhs2.mat;
}

// homotopy formula:
// (-1)^{qj} [phi_j, psi_q] = (-1)^q phi o-bar^(x) delta psi
//                            - (-1)^q delta(phi o-bar^(x) psi) - delta phi o-bar^(x) psi
template <class K>
bool verify_homotopy_formula(const OperadContext<K>& ctx, const Cochain<K>& phi,
                             const Cochain<K>& psi, const UTensor<K>& EZ, const UTensor<K>& ZE) {
    int j = phi.degree, q = psi.degree;
    Cochain<K> lhs = braided_cup_commutator(ctx, phi, psi, EZ, ZE);
    Matrix<K> L = ((q * j) % 2 == 0) ? lhs.mat : -lhs.mat;
    Cochain<K> t1 = external_gerstenhaber_product(ctx, phi, delta(ctx.barX, psi), EZ);
    Cochain<K> t2 = delta(ctx.barXX, external_gerstenhaber_product(ctx, phi, psi, EZ));
    Cochain<K> t3 = external_gerstenhaber_product(ctx, delta(ctx.barX, phi), psi, EZ);
    Matrix<K> R = (q % 2 == 0) ? (t1.mat - t2.mat) : (t2.mat - t1.mat);
    R -= t3.mat;
    return L == R;
}

// j = 0 reduction: [phi_0, psi_q] = - delta phi_0 o^(x)_1 psi_q
template <class K>
bool verify_homotopy_formula_deg0(const OperadContext<K>& ctx, const Cochain<K>& phi0,
                                  const Cochain<K>& psi, const UTensor<K>& EZ,
                                  const UTensor<K>& ZE) {
    Cochain<K> lhs = braided_cup_commutator(ctx, phi0, psi, EZ, ZE);
    Cochain<K> rhs = external_insert(ctx, delta(ctx.barX, phi0), psi, 1, EZ);
    return lhs.mat == -rhs.mat;
}

/*
 * Operad axioms (all three associativity branches, the zero conventions,
 * unitality, and the multiplication identities) on seeded random cochains.
 */
template <class K>
ValidationReport verify_operad(const OperadContext<K>& ctx, int degree_cap, int trials,
                               uint64_t seed) {
    ValidationReport rep;
    ctx.barX.ensure(std::max(3 * degree_cap - 2, 2));

    // mu o_1 mu = mu o_2 mu and mu o_i e = 1
    if (insert(ctx, ctx.mu, ctx.mu, 1).mat != insert(ctx, ctx.mu, ctx.mu, 2).mat)
        rep.fail("multiplication-associative", "mu o_1 mu != mu o_2 mu");
    if (insert(ctx, ctx.mu, ctx.e, 1).mat != ctx.one.mat) rep.fail("mu-e-left", "");
    if (insert(ctx, ctx.mu, ctx.e, 2).mat != ctx.one.mat) rep.fail("mu-e-right", "");

    Rng trialRng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int p = 1 + int(trialRng.below(degree_cap));
        int q = 1 + int(trialRng.below(degree_cap));
        int r = 1 + int(trialRng.below(degree_cap));
        uint64_t s1 = trialRng.next(), s2 = trialRng.next(), s3 = trialRng.next();
        Cochain<K> phi = random_cochain(ctx.barX, ctx.space(p), s1);
        Cochain<K> psi = random_cochain(ctx.barX, ctx.space(q), s2);
        Cochain<K> chi = random_cochain(ctx.barX, ctx.space(r), s3);
        std::string tag = "trial " + std::to_string(trial) + " (p,q,r)=" + idx3(p, q, r);

        // zero conventions
        if (!insert_total(ctx, phi, psi, p + 1).mat.is_zero()) rep.fail("zero-out-of-range", tag);
        if (!insert_total(ctx, ctx.e, psi, 1).mat.is_zero()) rep.fail("zero-p0", tag);

        // unitality
        for (int i = 1; i <= p; ++i)
            if (insert(ctx, phi, ctx.one, i).mat != phi.mat)
                rep.fail("unit-right", tag + " i=" + std::to_string(i));
        if (insert(ctx, ctx.one, phi, 1).mat != phi.mat) rep.fail("unit-left", tag);

        // associativity branches
        for (int i = 1; i <= p; ++i) {
            Cochain<K> inner = insert(ctx, phi, psi, i);
            for (int jj = 1; jj <= p + q - 1; ++jj) {
                Cochain<K> lhs = insert(ctx, inner, chi, jj);
                Matrix<K> rhs;
                const char* branch;
                if (jj < i) {
                    rhs = insert(ctx, insert(ctx, phi, chi, jj), psi, i + r - 1).mat;
                    branch = "branch-jlti";
                } else if (jj < q + i) {
                    rhs = insert(ctx, phi, insert(ctx, psi, chi, jj - i + 1), i).mat;
                    branch = "branch-mid";
                } else {
                    rhs = insert(ctx, insert(ctx, phi, chi, jj - q + 1), psi, i).mat;
                    branch = "branch-jgeqi";
                }
                if (lhs.mat != rhs)
                    rep.fail(branch, tag + " i=" + std::to_string(i) + " j=" + std::to_string(jj));
            }
        }
    }
    return rep;
}

} // namespace gext
