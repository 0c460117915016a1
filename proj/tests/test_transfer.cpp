#include <doctest.h>

#include "gext/fixtures.hpp"
#include "gext/transfer.hpp"

using namespace gext;

namespace {
struct Ctx {
    LeftBialgebroid<Rat> B;
    std::unique_ptr<OperadContext<Rat>> ctxp;
    OperadContext<Rat>& ctx;
    Ctx()
        : B(enveloping(fixtures::dual_numbers<Rat>())),
          ctxp(make_operad_context(B, unit_coefficients(B))),
          ctx(*ctxp) {}
    Cochain<Rat> cocycle(int p) {
        auto E = ext_groups(ctx, p);
        auto S = ctx.space(p);
        if (!E.reps[p].empty()) return cochain_from_coords(ctx.barX, S, E.reps[p][0]);
        return cochain_from_coords(ctx.barX, S, to_dense(E.cocycles[p].basis[0], S.dim()));
    }
    std::unique_ptr<TransferSetup<Rat>> setup(int p, int q) {
        auto Ew = extension_from_cocycle(ctx, cocycle(p));
        auto Fw = extension_from_cocycle(ctx, cocycle(q));
        return make_transfer_setup(ctx, std::move(Ew), std::move(Fw));
    }
};
} // namespace

TEST_CASE("hash_mu_delta: G is a complex with exact ends") {
    Ctx F;
    auto T = F.setup(1, 1);
    const auto& G = T->G;
    CHECK(check_complex(G.D).ok());
    // honest exactness of the restricted extension at top and bottom
    CHECK(kernel(G.d(G.r)).dim() == 0);
    CHECK(rank(G.d(0)) == F.ctx.C.X.mod.dim);
}

TEST_CASE("Phi intertwines with Psi: Phi([d, nu]) = [d, Psi(nu)] on random collections") {
    Ctx F;
    auto T = F.setup(1, 1);
    const auto& G = T->G;
    int r = G.r;
    // random degree +1 collection nu with nu_{-1} = 0 and nu in the
    // U-linear cochain spaces (targets are the splice components)
    Rng rng(4242);
    GradedMaps<Rat> nu;
    nu.top = r - 1;
    nu.comp.push_back(Matrix<Rat>(T->S1.at(0).dim, F.ctx.XX.q.dim));
    for (int k = 0; k <= r - 1; ++k) {
        auto S = cochain_space(F.ctx.barXX, k, T->S1.at(k + 1));
        nu.comp.push_back(random_cochain(F.ctx.barXX, S, rng.next()).mat);
    }
    // xi := [d, nu]
    GradedMaps<Rat> xi = commutator_d_s(*T, nu);
    GradedMaps<Rat> lhs = phi_transfer(F.ctx, G, xi);
    GradedMaps<Rat> rhs = commutator_d_psi(F.ctx, G, psi_transfer(F.ctx, G, nu));
    for (int k = -1; k <= r; ++k) CHECK(lhs.at(k) == rhs.at(k));
}

TEST_CASE("Phi of zero is zero (pure linear-map transfer)") {
    Ctx F;
    auto T = F.setup(1, 1);
    GradedMaps<Rat> zero;
    zero.top = T->G.r;
    zero.comp.push_back(Matrix<Rat>(F.ctx.XX.q.dim, F.ctx.XX.q.dim));
    for (int k = 0; k <= T->G.r; ++k)
        zero.comp.push_back(Matrix<Rat>(T->S1.at(k).dim, F.ctx.barXX.dim(k)));
    auto out = phi_transfer(F.ctx, T->G, zero);
    for (int k = -1; k <= T->G.r; ++k) CHECK(out.at(k).is_zero());
}

TEST_CASE("extension loop at (1,1): every identity of the pipeline") {
    Ctx F;
    auto T = F.setup(1, 1);
    auto rep = verify_extension_loop(F.ctx, *T);
    for (auto& f : rep.failures) MESSAGE(f.axiom, " @ ", f.witness);
    CHECK(rep.ok());
}

TEST_CASE("eta matches the closed form: top and middle bands") {
    Ctx F;
    auto T = F.setup(1, 1);
    int p = 1, q = 1;
    GradedMaps<Rat> eta = eta_collection(*T);
    // k < q components vanish
    CHECK(eta.at(-1).is_zero());
    CHECK(eta.at(0).is_zero());
    // top: [phi_p, psi_q] + (-1)^{pq} sigma o [psi_q, phi_p]
    {
        auto ZE = tensor_modules(F.B, F.ctx.C.Z.mod, T->E.at(p));
        Cochain<Rat> c1 = braided_cup_commutator(F.ctx, T->phiC(p), T->psiC(q),
                                                 T->S1.fac(p + q), ZE);
        auto ZF = tensor_modules(F.B, F.ctx.C.Z.mod, T->F.at(q));
        Cochain<Rat> c2 = braided_cup_commutator(F.ctx, T->psiC(q), T->phiC(p), F.ctx.ZZ, ZF);
        Matrix<Rat> sig = braiding_sigma(F.B, F.ctx.C.Z, F.ctx.C.Z.mod, F.ctx.ZZ, F.ctx.ZZ);
        Matrix<Rat> expect = c1.mat;
        Matrix<Rat> second = sig * c2.mat;
        if ((p * q) % 2 == 0) expect += second;
        else expect -= second;
        CHECK(eta.at(p + q) == expect);
    }
    // middle band k = p+q-1: commutator part plus the sign-suspect term;
    // decide the sign empirically against the eq-eta-derived eta
    {
        int k = p + q - 1;
        auto ZE = tensor_modules(F.B, F.ctx.C.Z.mod, T->E.at(p - 1));
        Cochain<Rat> comm = braided_cup_commutator(F.ctx, T->phiC(p - 1), T->psiC(q),
                                                   T->S1.fac(k), ZE);
        Cochain<Rat> prod = external_gerstenhaber_product(F.ctx, T->psiC(q), T->phiC(p), F.ctx.ZZ);
        Matrix<Rat> sigZZ = braiding_sigma(F.B, F.ctx.C.Z, F.ctx.C.Z.mod, F.ctx.ZZ, F.ctx.ZZ);
        // sigma o (Z (x) i_E) o (psi q obar phi p)
        Matrix<Rat> ZiE = tensor_map(F.ctx.ZZ, T->S1.fac(k),
                                     Matrix<Rat>::identity(F.ctx.C.Z.mod.dim), T->E.d(p));
        // note: sigma_{Z, E_{p-1}} o (Z (x) i_E) = (i_E (x) Z) o sigma_{Z,Z}
        auto ZEp = tensor_modules(F.B, F.ctx.C.Z.mod, T->E.at(p - 1));
        Matrix<Rat> sig2 = braiding_sigma(F.B, F.ctx.C.Z, T->E.at(p - 1), ZEp, T->S1.fac(k));
        Matrix<Rat> ZiE2 = tensor_map(F.ctx.ZZ, ZEp, Matrix<Rat>::identity(F.ctx.C.Z.mod.dim),
                                      T->E.d(p));
        Matrix<Rat> term = sig2 * ZiE2 * prod.mat;
        Matrix<Rat> variantPQ = comm.mat + (((p + q) % 2 == 0) ? term : -term);
        Matrix<Rat> variantP1 = comm.mat + (((p + 1) % 2 == 0) ? term : -term);
        // both sign candidates coincide at p = q = 1; the (1,2) case decides
        CHECK(eta.at(k) == variantP1);
        CHECK(eta.at(k) == variantPQ);
    }
}

TEST_CASE("bracket from the homotopy equals the operadic bracket, (1,1)") {
    Ctx F;
    auto T = F.setup(1, 1);
    auto brH = bracket_from_homotopy(*T);
    auto brO = bracket(F.ctx, T->phiC(1), T->psiC(1));
    CHECK(brH.mat == brO.mat);
}

TEST_CASE("extension loop at (1,2) and (2,1)") {
    Ctx F;
    for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 1}}) {
        auto T = F.setup(p, q);
        auto rep = verify_extension_loop(F.ctx, *T);
        for (auto& f : rep.failures) MESSAGE("(", p, ",", q, ") ", f.axiom, " @ ", f.witness);
        CHECK(rep.ok());
    }
}

TEST_CASE("eta closed-form middle band carries the sign (-1)^{p+1}, settled at (1,2)") {
    Ctx F;
    int p = 1, q = 2;
    auto T = F.setup(p, q);
    GradedMaps<Rat> eta = eta_collection(*T);
    int k = p + q - 1;
    auto ZE = tensor_modules(F.B, F.ctx.C.Z.mod, T->E.at(p - 1));
    Cochain<Rat> comm = braided_cup_commutator(F.ctx, T->phiC(p - 1), T->psiC(q),
                                               T->S1.fac(k), ZE);
    Cochain<Rat> prod = external_gerstenhaber_product(F.ctx, T->psiC(q), T->phiC(p), F.ctx.ZZ);
    auto ZEp = tensor_modules(F.B, F.ctx.C.Z.mod, T->E.at(p - 1));
    Matrix<Rat> sig2 = braiding_sigma(F.B, F.ctx.C.Z, T->E.at(p - 1), ZEp, T->S1.fac(k));
    Matrix<Rat> ZiE2 = tensor_map(F.ctx.ZZ, ZEp, Matrix<Rat>::identity(F.ctx.C.Z.mod.dim),
                                  T->E.d(p));
    Matrix<Rat> term = sig2 * ZiE2 * prod.mat;
    Matrix<Rat> variantPQ = comm.mat + (((p + q) % 2 == 0) ? term : -term);
    Matrix<Rat> variantP1 = comm.mat + (((p + 1) % 2 == 0) ? term : -term);
    // the correction term is nonzero here, so the two candidates differ
    REQUIRE(!term.is_zero());
    CHECK(eta.at(k) == variantP1);
    CHECK(eta.at(k) != variantPQ);
}

TEST_CASE("merged r = 1 transfer: the phi-completed lift is a chain map") {
    Ctx F;
    auto& ctx = F.ctx;
    // a length-1 extension of X (x) X by Z (x) Z: the split one
    auto H = split_extension(ctx.XX.mod, ctx.ZZ.mod);
    // view it as a SpliceComplex so hash_mu_delta can consume it
    SpliceComplex<Rat> Hs;
    Hs.p = 1; Hs.q = 0; Hs.top = 1;
    Hs.T.push_back(ctx.XX);
    UTensor<Rat> mid; mid.q = quotient(H.at(0).dim, Subspace<Rat>::zero(H.at(0).dim));
    mid.mod = H.at(0); mid.dimL = H.at(0).dim; mid.dimR = 1;
    Hs.T.push_back(mid);
    Hs.T.push_back(ctx.ZZ);
    Hs.D = {H.d(0), H.d(1)};

    auto G = hash_mu_delta(ctx, Hs);
    CHECK(G.merged);
    CHECK(check_complex(G.D).ok());
    CHECK(kernel(G.d(1)).dim() == 0);
    CHECK(rank(G.d(0)) == ctx.C.X.mod.dim);

    // a genuine cocycle representative xi: Bar(U, XX) -> H, lifted over id
    auto xi_maps = lift_chain_map_over(ctx.barXX, H, Matrix<Rat>::identity(ctx.XX.q.dim));
    GradedMaps<Rat> xi;
    xi.top = 1;
    xi.comp = {Matrix<Rat>::identity(ctx.XX.q.dim), xi_maps.at(0), xi_maps.at(1)};

    // (0, (0,0,L), id) + Phi(xi) is a cocycle representative for mu#H#Delta_X
    auto chi = phi_transfer(ctx, G, xi);
    auto cst = constant_representative(ctx, G);
    for (int k = -1; k <= 1; ++k) chi.at(k) += cst.at(k);
    for (int k = 0; k <= 1; ++k)
        CHECK(G.d(k) * chi.at(k) == chi.at(k - 1) * ctx.barX.d(k));
    // degree-0 values satisfy the recorded pullback condition
    for (int c = 0; c < chi.at(0).cols(); ++c)
        CHECK(G.pullback0.contains(chi.at(0).col(c)));
    // Phi([d,nu]) = [d, Psi(nu)] holds in the merged case too
    Rng rng(77);
    GradedMaps<Rat> nu;
    nu.top = 0;
    nu.comp.push_back(Matrix<Rat>(H.at(0).dim, ctx.XX.q.dim));
    nu.comp.push_back(random_cochain(ctx.barXX, cochain_space(ctx.barXX, 0, ctx.ZZ.mod), rng.next()).mat);
    // [d, nu]
    GradedMaps<Rat> dnu;
    dnu.top = 1;
    dnu.comp.push_back(Hs.D[0] * nu.at(-1));
    dnu.comp.push_back(Hs.D[1] * nu.at(0) + nu.at(-1) * ctx.barXX.d(0));
    dnu.comp.push_back(nu.at(0) * ctx.barXX.d(1));
    auto lhs = phi_transfer(ctx, G, dnu);
    auto rhs = commutator_d_psi(ctx, G, psi_transfer(ctx, G, nu));
    for (int k = -1; k <= 1; ++k) CHECK(lhs.at(k) == rhs.at(k));
}

TEST_CASE("degenerate hash of morphisms is composition") {
    Matrix<Rat> f(2, 2), g(2, 2);
    f(0, 1) = Rat(3);
    g(1, 0) = Rat(2);
    CHECK(splice_compose(f, g) == f * g);
}
