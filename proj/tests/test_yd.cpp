#include <doctest.h>

#include "gext/fixtures.hpp"
#include "gext/yd.hpp"

using namespace gext;

namespace {

// C2 YD pair with a genuinely non-trivial braiding mismatch:
// Z = sign module with odd grading, X = trivial module with odd grading.
LeftYD<Rat> c2_sign_odd() {
    LeftYD<Rat> Z;
    Z.mod.dim = 1;
    Z.mod.act = {Matrix<Rat>::identity(1), Rat(-1) * Matrix<Rat>::identity(1)};
    Z.coact = {{{Rat(1), 1, 0}}};  // z |-> g (x) z
    return Z;
}
RightYD<Rat> c2_trivial_odd() {
    RightYD<Rat> X;
    X.mod.dim = 1;
    X.mod.act = {Matrix<Rat>::identity(1), Matrix<Rat>::identity(1)};
    X.coact = {{{Rat(1), 0, 1}}};  // x |-> x (x) g
    return X;
}

} // namespace

TEST_CASE("unit coefficients validate on the bundled bialgebroids") {
    auto Bk = enveloping(FiniteAlgebra<Rat>::ground_field());
    CHECK_NOTHROW(unit_coefficients(Bk));

    auto Bd = enveloping(fixtures::dual_numbers<Rat>());
    CHECK_NOTHROW(unit_coefficients(Bd));

    auto Bc = fixtures::c2_bialgebroid<Rat>();
    CHECK_NOTHROW(unit_coefficients(Bc));
}

TEST_CASE("braiding sigma: equivariance and naturality") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);

    auto M = Module<Rat>::regular(B);  // U as a module over itself
    auto ZM = tensor_modules(B, C.Z.mod, M);
    auto MZ = tensor_modules(B, M, C.Z.mod);
    auto sig = braiding_sigma(B, C.Z, M, ZM, MZ);
    CHECK(check_equivariant(sig, ZM.mod.act, MZ.mod.act, "sigma").ok());

    auto ZA = tensor_modules(B, C.Z.mod, C.Z.mod);
    auto sigAA = braiding_sigma(B, C.Z, C.Z.mod, ZA, ZA);
    CHECK(check_equivariant(sigAA, ZA.mod.act, ZA.mod.act, "sigmaAA").ok());

    // naturality square for the zero morphism commutes trivially
    Matrix<Rat> fzero(M.dim, M.dim);
    CHECK(tensor_map(MZ, MZ, fzero, Matrix<Rat>::identity(C.Z.mod.dim)) * sig ==
          sig * tensor_map(ZM, ZM, Matrix<Rat>::identity(C.Z.mod.dim), fzero));

    // naturality for a genuine U-module map: right multiplication by s(x)
    Matrix<Rat> f = B.s_rmul[1];
    REQUIRE(check_equivariant(f, M.act, M.act, "rmul").ok());
    auto natL = tensor_map(MZ, MZ, f, Matrix<Rat>::identity(C.Z.mod.dim)) * sig;
    auto natR = sig * tensor_map(ZM, ZM, Matrix<Rat>::identity(C.Z.mod.dim), f);
    CHECK(natL == natR);
}

TEST_CASE("braiding tau mirrors sigma") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);
    auto M = Module<Rat>::regular(B);
    auto MX = tensor_modules(B, M, C.X.mod);
    auto XM = tensor_modules(B, C.X.mod, M);
    auto tau = braiding_tau(B, M, C.X, MX, XM);
    CHECK(check_equivariant(tau, MX.mod.act, XM.mod.act, "tau").ok());

    Matrix<Rat> f = B.s_rmul[1];
    auto lhs = tensor_map(XM, XM, Matrix<Rat>::identity(C.X.mod.dim), f) * tau;
    auto rhs = tau * tensor_map(MX, MX, f, Matrix<Rat>::identity(C.X.mod.dim));
    CHECK(lhs == rhs);
}

TEST_CASE("hexagon law for sigma") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);
    auto M = Module<Rat>::regular(B);
    auto N = C.X.mod;

    auto MN = tensor_modules(B, M, N);
    auto Z_MN = tensor_modules(B, C.Z.mod, MN.mod);
    auto MN_Z = tensor_modules(B, MN.mod, C.Z.mod);
    auto lhs = braiding_sigma(B, C.Z, MN.mod, Z_MN, MN_Z);

    auto ZM = tensor_modules(B, C.Z.mod, M);
    auto MZ = tensor_modules(B, M, C.Z.mod);
    auto ZN = tensor_modules(B, C.Z.mod, N);
    auto NZ = tensor_modules(B, N, C.Z.mod);
    auto sigM = braiding_sigma(B, C.Z, M, ZM, MZ);
    auto sigN = braiding_sigma(B, C.Z, N, ZN, NZ);

    auto ZM_N = tensor_modules(B, ZM.mod, N);
    auto MZ_N = tensor_modules(B, MZ.mod, N);
    auto M_ZN = tensor_modules(B, M, ZN.mod);
    auto M_NZ = tensor_modules(B, M, NZ.mod);

    // reassociations built from representatives
    Matrix<Rat> a1(ZM_N.q.dim, Z_MN.q.dim);  // Z (x) (M (x) N) -> (Z (x) M) (x) N
    for (int j = 0; j < Z_MN.q.dim; ++j) {
        int amb = Z_MN.q.rep_index[j];
        int z = amb / MN.q.dim, mn = amb % MN.q.dim;
        int mnAmb = MN.q.rep_index[mn];
        a1.set_col(j, ZM_N.project(ZM.project_basis(z, mnAmb / N.dim),
                                   unit_vec<Rat>(N.dim, mnAmb % N.dim)));
    }
    Matrix<Rat> a2(M_ZN.q.dim, MZ_N.q.dim);  // (M (x) Z) (x) N -> M (x) (Z (x) N)
    for (int j = 0; j < MZ_N.q.dim; ++j) {
        int amb = MZ_N.q.rep_index[j];
        int mz = amb / N.dim, n = amb % N.dim;
        int mzAmb = MZ.q.rep_index[mz];
        a2.set_col(j, M_ZN.project(unit_vec<Rat>(M.dim, mzAmb / C.Z.mod.dim),
                                   ZN.project_basis(mzAmb % C.Z.mod.dim, n)));
    }
    Matrix<Rat> a3(MN_Z.q.dim, M_NZ.q.dim);  // M (x) (N (x) Z) -> (M (x) N) (x) Z
    for (int j = 0; j < M_NZ.q.dim; ++j) {
        int amb = M_NZ.q.rep_index[j];
        int m = amb / NZ.q.dim, nz = amb % NZ.q.dim;
        int nzAmb = NZ.q.rep_index[nz];
        a3.set_col(j, MN_Z.project(MN.project_basis(m, nzAmb / C.Z.mod.dim),
                                   unit_vec<Rat>(C.Z.mod.dim, nzAmb % C.Z.mod.dim)));
    }

    auto sigM_N = tensor_map(ZM_N, MZ_N, sigM, Matrix<Rat>::identity(N.dim));
    auto M_sigN = tensor_map(M_ZN, M_NZ, Matrix<Rat>::identity(M.dim), sigN);
    auto rhs = a3 * M_sigN * a2 * sigM_N * a1;
    CHECK(lhs == rhs);
}

TEST_CASE("commuting pair passes for unit coefficients and for (M,A), (A,N)") {
    auto B = fixtures::c2_bialgebroid<Rat>();
    auto C = unit_coefficients(B);
    CHECK(check_commuting_pair(B, C.X, C.Z).ok());

    auto Zs = c2_sign_odd();
    auto Xo = c2_trivial_odd();
    CHECK(check_yd_left_left(B, Zs).ok());
    CHECK(check_yd_left_right(B, Xo).ok());
    // (M, A) and (A, N) are commuting pairs for arbitrary validated YD modules
    CHECK(check_commuting_pair(B, Xo, C.Z).ok());
    CHECK(check_commuting_pair(B, C.X, Zs).ok());
}

TEST_CASE("a genuinely non-commuting pair fails with a witness") {
    auto B = fixtures::c2_bialgebroid<Rat>();
    auto Zs = c2_sign_odd();
    auto Xo = c2_trivial_odd();
    auto rep = check_commuting_pair(B, Xo, Zs);
    REQUIRE(!rep.ok());
    CHECK(rep.failures[0].axiom == "commuting-pair");
    CHECK(rep.failures[0].witness == "(0,0)");
}

TEST_CASE("twisted coaction on Z breaks the YD axioms with a witness") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);
    auto Z = C.Z;
    // twist: z |-> t(z) (x) 1 instead of s(z) (x) 1
    Z.coact.assign(Z.mod.dim, {});
    for (int z = 0; z < Z.mod.dim; ++z) {
        Vec<Rat> tz = B.t.col(z);
        for (int p = 0; p < B.U.dim; ++p)
            if (!tz[p].is_zero()) Z.coact[z].push_back({tz[p], p, 0});
    }
    auto rep = check_yd_left_left(B, Z);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (auto& f : rep.failures) witnessed = witnessed || !f.witness.empty();
    CHECK(witnessed);
}

TEST_CASE("braided (co)monoid checkers pass on unit coefficients and name corruption") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);
    CHECK(check_braided_monoid(B, C.Z).ok());
    CHECK(check_braided_comonoid(B, C.X).ok());

    auto bad = C.Z;
    bad.mu(0, 1 * 2 + 1) = Rat(1);  // x*x := 1 breaks the module-algebra law
    auto rep = check_braided_monoid(B, bad);
    CHECK(!rep.ok());
    bool named = false;
    for (auto& f : rep.failures)
        if (f.axiom == "module-algebra") named = true;
    CHECK(named);
}

TEST_CASE("braidings on the unit object are the canonical identifications") {
    auto B = enveloping(fixtures::dual_numbers<Rat>());
    auto C = unit_coefficients(B);
    auto M = Module<Rat>::regular(B);
    auto ZM = tensor_modules(B, C.Z.mod, M);
    auto MZ = tensor_modules(B, M, C.Z.mod);
    auto sig = braiding_sigma(B, C.Z, M, ZM, MZ);

    // canonical A (x)_A M ~ M: a (x) m -> s(a)m, and M (x)_A A ~ M: m (x) a -> t(a)m
    Matrix<Rat> lhsIso(M.dim, ZM.q.dim), rhsIso(M.dim, MZ.q.dim);
    for (int j = 0; j < ZM.q.dim; ++j) {
        int amb = ZM.q.rep_index[j];
        lhsIso.set_col(j, M.apply(B.s.col(amb / M.dim), unit_vec<Rat>(M.dim, amb % M.dim)));
    }
    for (int j = 0; j < MZ.q.dim; ++j) {
        int amb = MZ.q.rep_index[j];
        rhsIso.set_col(j, M.apply(B.t.col(amb % C.Z.mod.dim), unit_vec<Rat>(M.dim, amb / C.Z.mod.dim)));
    }
    CHECK(rhsIso * sig == lhsIso);

    auto MX = tensor_modules(B, M, C.X.mod);
    auto XM = tensor_modules(B, C.X.mod, M);
    auto tau = braiding_tau(B, M, C.X, MX, XM);
    Matrix<Rat> srcIso(M.dim, MX.q.dim), dstIso(M.dim, XM.q.dim);
    for (int j = 0; j < MX.q.dim; ++j) {
        int amb = MX.q.rep_index[j];
        srcIso.set_col(j, M.apply(B.t.col(amb % C.X.mod.dim), unit_vec<Rat>(M.dim, amb / C.X.mod.dim)));
    }
    for (int j = 0; j < XM.q.dim; ++j) {
        int amb = XM.q.rep_index[j];
        dstIso.set_col(j, M.apply(B.s.col(amb / M.dim), unit_vec<Rat>(M.dim, amb % M.dim)));
    }
    CHECK(dstIso * tau == srcIso);
}
