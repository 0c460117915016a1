#include <doctest.h>

#include "gext/bar.hpp"
#include "gext/fixtures.hpp"

using namespace gext;

namespace {
struct Fixture {
    LeftBialgebroid<Rat> B;
    CoefficientPair<Rat> C;
    BarLadder<Rat> bar;
    Fixture() {
        B = enveloping(fixtures::dual_numbers<Rat>());
        C = unit_coefficients(B);
        bar.init(&B, C.X.mod);
    }
};
} // namespace

TEST_CASE("bar over the ground field: Bar_n is one-dimensional, d alternates") {
    auto B = enveloping(FiniteAlgebra<Rat>::ground_field());
    auto C = unit_coefficients(B);
    BarLadder<Rat> bar;
    bar.init(&B, C.X.mod);
    bar.ensure(4);
    for (int n = 0; n <= 4; ++n) CHECK(bar.dim(n) == 1);
    CHECK(bar.d(0)(0, 0) == Rat(1));  // L is the identity
    for (int n = 1; n <= 4; ++n) {
        // d = sum of n+1 alternating faces, each the identity on k
        Rat expect = (n % 2 == 0) ? Rat(1) : Rat(0);
        CHECK(bar.d(n)(0, 0) == expect);
    }
}

TEST_CASE("bar ladder over the dual-numbers fixture: dims, d o d = 0, equivariance") {
    Fixture F;
    F.bar.ensure(5);
    // U = A^e is free of rank 2 over t(A), so dim Bar_n = 4 * 2^n
    for (int n = 0; n <= 5; ++n) CHECK(F.bar.dim(n) == 4 << n);
    for (int n = 1; n <= 5; ++n) CHECK((F.bar.d(n - 1) * F.bar.d(n)).is_zero());
    for (int n = 0; n <= 5; ++n) {
        const Module<Rat>& src = F.bar.lv[n].mod;
        const Module<Rat>& dst = (n == 0) ? F.bar.W : F.bar.lv[n - 1].mod;
        CHECK(check_equivariant(F.bar.d(n), src.act, dst.act, "d").ok());
    }
}

TEST_CASE("bar is exact through the built range") {
    Fixture F;
    F.bar.ensure(5);
    // augmentation is onto and rank conditions hold at every inner spot
    CHECK(rank(F.bar.d(0)) == 2);
    for (int n = 0; n <= 4; ++n) {
        int r_n = rank(F.bar.d(n));
        int r_n1 = rank(F.bar.d(n + 1));
        CHECK(r_n + r_n1 == F.bar.dim(n));
    }
}

TEST_CASE("cochain space dimensions match the classical Hochschild count") {
    Fixture F;
    F.bar.ensure(4);
    // Hom_U(Bar_n, Z) = Hom_k(A^{(x) n}, A): dim = 2^n * 2
    for (int n = 0; n <= 3; ++n) {
        auto S = cochain_space(F.bar, n, F.C.Z.mod);
        CHECK(S.dim() == (1 << n) * 2);
    }
}

TEST_CASE("random cochains: deterministic, U-linear, delta squares to zero") {
    Fixture F;
    F.bar.ensure(4);
    auto S1 = cochain_space(F.bar, 1, F.C.Z.mod);
    auto c1 = random_cochain(F.bar, S1, 12345);
    auto c2 = random_cochain(F.bar, S1, 12345);
    CHECK(c1 == c2);
    auto c3 = random_cochain(F.bar, S1, 54321);
    CHECK(check_u_linear(F.bar, c1).ok());
    CHECK(check_u_linear(F.bar, c3).ok());

    CHECK(delta(F.bar, delta(F.bar, c1)).mat.is_zero());
    CHECK(delta(F.bar, delta(F.bar, c3)).mat.is_zero());

    auto S2 = cochain_space(F.bar, 2, F.C.Z.mod);
    auto S3 = cochain_space(F.bar, 3, F.C.Z.mod);
    auto d12 = delta_matrix(F.bar, S1, S2);
    auto d23 = delta_matrix(F.bar, S2, S3);
    CHECK((d23 * d12).is_zero());
}

TEST_CASE("normalized-value constructor round-trips and rejects bad data") {
    Fixture F;
    F.bar.ensure(2);
    auto S1 = cochain_space(F.bar, 1, F.C.Z.mod);

    // zero values -> zero cochain
    Matrix<Rat> z(F.C.Z.mod.dim, F.bar.tail_dim(1));
    CHECK(cochain_from_normalized(F.bar, 1, F.C.Z.mod, z).mat.is_zero());

    // restriction o extension = identity on valid data
    auto c = random_cochain(F.bar, S1, 777);
    Matrix<Rat> f = cochain_to_tail(F.bar, c);
    auto c2 = cochain_from_normalized(F.bar, 1, F.C.Z.mod, f);
    CHECK(c == c2);

    // data violating the tail constraint is rejected with a witness
    bool foundBad = false;
    for (int r = 0; r < f.rows() && !foundBad; ++r)
        for (int t = 0; t < f.cols() && !foundBad; ++t) {
            Matrix<Rat> g(f.rows(), f.cols());
            g(r, t) = Rat(1);
            ValidationReport rep;
            cochain_from_normalized(F.bar, 1, F.C.Z.mod, g, &rep);
            if (!rep.ok()) foundBad = true;
        }
    CHECK(foundBad);
}

TEST_CASE("cochain coordinates invert cochain_from_coords") {
    Fixture F;
    F.bar.ensure(3);
    auto S2 = cochain_space(F.bar, 2, F.C.Z.mod);
    Rng rng(9);
    Vec<Rat> coords(S2.dim());
    for (auto& c : coords) c = rng.small_scalar<Rat>();
    auto c = cochain_from_coords(F.bar, S2, coords);
    auto back = cochain_coords(F.bar, S2, c);
    REQUIRE(back.has_value());
    CHECK(*back == coords);
}
