#pragma once

#include "gext/operad.hpp"

namespace gext {

/*
 * Ext groups as ker delta / im delta in the coordinate spaces of
 * Hom_U(Bar_n(U,X), Z). Representatives are echelon-selected cocycles
 * complementary to the coboundaries, so the choice is deterministic.
 */
template <class K>
struct ExtGroups {
    int max_degree = 0;
    std::vector<Subspace<K>> cocycles;      // in C^n coordinates
    std::vector<Subspace<K>> coboundaries;  // in C^n coordinates
    std::vector<int> dims;                  // Ext^n dimensions
    std::vector<std::vector<Vec<K>>> reps;  // chosen class representatives (coords)
};

template <class K>
ExtGroups<K> ext_groups(const OperadContext<K>& ctx, int n_max) {
    ExtGroups<K> E;
    E.max_degree = n_max;
    ctx.barX.ensure(n_max + 1);
    std::vector<Matrix<K>> dmat(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        dmat[n] = delta_matrix(ctx.barX, ctx.space(n), ctx.space(n + 1));
    for (int n = 0; n <= n_max; ++n) {
        Subspace<K> Zn = kernel(dmat[n]);
        Subspace<K> Bn = (n == 0) ? Subspace<K>::zero(ctx.space(0).dim())
                                  : Subspace<K>::row_space(dmat[n - 1].transpose());
        E.cocycles.push_back(Zn);
        E.coboundaries.push_back(Bn);
        E.dims.push_back(Zn.dim() - Bn.dim());
        // representatives: cocycle basis vectors independent modulo coboundaries
        std::vector<Vec<K>> reps;
        Subspace<K> span = Bn;
        for (const auto& row : Zn.basis) {
            if (!span.reduce(row).empty()) {
                reps.push_back(to_dense(row, Zn.ambient_dim));
                std::vector<SparseRow<K>> rows = span.basis;
                rows.push_back(row);
                span = Subspace<K>::span(Zn.ambient_dim, rows);
            }
        }
        E.reps.push_back(std::move(reps));
    }
    return E;
}

// canonical basis of the degree-n cocycles, in cochain coordinates
template <class K>
Subspace<K> solve_cocycles(const OperadContext<K>& ctx, int degree) {
    ctx.barX.ensure(degree + 1);
    return kernel(delta_matrix(ctx.barX, ctx.space(degree), ctx.space(degree + 1)));
}

// Is the cochain a coboundary? If so return a primitive h with delta h = c.
template <class K>
std::optional<Cochain<K>> solve_coboundary(const OperadContext<K>& ctx, const Cochain<K>& c) {
    int n = c.degree;
    if (n == 0) return std::nullopt;
    auto coords = cochain_coords(ctx.barX, ctx.space(n), c);
    if (!coords) return std::nullopt;
    Matrix<K> dmat = delta_matrix(ctx.barX, ctx.space(n - 1), ctx.space(n));
    auto h = solve(dmat, *coords);
    if (!h) return std::nullopt;
    return cochain_from_coords(ctx.barX, ctx.space(n - 1), *h);
}

template <class K>
bool is_cocycle(const OperadContext<K>& ctx, const Cochain<K>& c) {
    return delta(ctx.barX, c).mat.is_zero();
}

// class-level cup/bracket: computed on representatives; the class is the
// coordinate vector of the result modulo coboundaries
template <class K>
Cochain<K> class_cup(const OperadContext<K>& ctx, const Cochain<K>& a, const Cochain<K>& b) {
    if (!is_cocycle(ctx, a) || !is_cocycle(ctx, b))
        throw std::invalid_argument("class_cup: inputs must be cocycles");
    return cup(ctx, a, b);
}
template <class K>
Cochain<K> class_bracket(const OperadContext<K>& ctx, const Cochain<K>& a, const Cochain<K>& b) {
    if (!is_cocycle(ctx, a) || !is_cocycle(ctx, b))
        throw std::invalid_argument("class_bracket: inputs must be cocycles");
    return bracket(ctx, a, b);
}

// equality of cohomology classes, decided by solving delta h = difference
template <class K>
bool same_class(const OperadContext<K>& ctx, const Cochain<K>& a, const Cochain<K>& b) {
    Cochain<K> diff = a;
    diff.mat -= b.mat;
    if (diff.mat.is_zero()) return true;
    return solve_coboundary(ctx, diff).has_value();
}

/*
 * Gerstenhaber axioms on classes up to degree_cap: graded commutativity of
 * the cup, graded antisymmetry and Jacobi of the bracket, and the Leibniz
 * rule, each decided up to coboundary with the primitive exhibited.
 */
template <class K>
ValidationReport verify_gerstenhaber(const OperadContext<K>& ctx, const ExtGroups<K>& E,
                                     int degree_cap) {
    ValidationReport rep;
    auto rep_cochain = [&](int n, int i) {
        return cochain_from_coords(ctx.barX, ctx.space(n), E.reps[n][i]);
    };
    struct Cls {
        int deg;
        Cochain<K> c;
    };
    std::vector<Cls> classes;
    for (int n = 0; n <= degree_cap; ++n)
        for (int i = 0; i < int(E.reps[n].size()); ++i) classes.push_back({n, rep_cochain(n, i)});

    // cup and bracket of cocycles are cocycles
    for (const auto& a : classes)
        for (const auto& b : classes) {
            if (!is_cocycle(ctx, cup(ctx, a.c, b.c)))
                rep.fail("cup-of-cocycles-cocycle", idx2(a.deg, b.deg));
            if (a.deg + b.deg >= 1 && !is_cocycle(ctx, bracket(ctx, a.c, b.c)))
                rep.fail("bracket-of-cocycles-cocycle", idx2(a.deg, b.deg));
        }

    // graded commutativity: a u b = (-1)^{pq} b u a up to coboundary
    for (const auto& a : classes)
        for (const auto& b : classes) {
            Cochain<K> lhs = cup(ctx, a.c, b.c);
            Cochain<K> rhs = cup(ctx, b.c, a.c);
            if ((a.deg * b.deg) % 2 != 0) rhs.mat = -rhs.mat;
            if (!same_class(ctx, lhs, rhs)) rep.fail("cup-graded-commutative", idx2(a.deg, b.deg));
        }

    // antisymmetry: {a,b} = -(-1)^{(p-1)(q-1)} {b,a} up to coboundary
    for (const auto& a : classes)
        for (const auto& b : classes) {
            if (a.deg + b.deg < 1) continue;  // the bracket lands in O(-1) = 0
            Cochain<K> lhs = bracket(ctx, a.c, b.c);
            Cochain<K> rhs = bracket(ctx, b.c, a.c);
            if (((a.deg - 1) * (b.deg - 1)) % 2 == 0) rhs.mat = -rhs.mat;
            if (!same_class(ctx, lhs, rhs)) rep.fail("bracket-antisymmetric", idx2(a.deg, b.deg));
        }

    // graded Jacobi (Lie bracket of degree -1):
    // {a,{b,c}} = {{a,b},c} + (-1)^{(p-1)(q-1)} {b,{a,c}}
    for (const auto& a : classes)
        for (const auto& b : classes)
            for (const auto& c : classes) {
                if (a.deg + b.deg < 1 || b.deg + c.deg < 1 || a.deg + c.deg < 1 ||
                    a.deg + b.deg + c.deg < 2)
                    continue;
                Cochain<K> lhs = bracket(ctx, a.c, bracket(ctx, b.c, c.c));
                Cochain<K> r1 = bracket(ctx, bracket(ctx, a.c, b.c), c.c);
                Cochain<K> r2 = bracket(ctx, b.c, bracket(ctx, a.c, c.c));
                Matrix<K> rhs =
                    r1.mat + ((((a.deg - 1) * (b.deg - 1)) % 2 == 0) ? r2.mat : -r2.mat);
                Cochain<K> rhsC{lhs.degree, lhs.target, rhs};
                if (!same_class(ctx, lhs, rhsC))
                    rep.fail("bracket-jacobi", idx3(a.deg, b.deg, c.deg));
            }

    // Leibniz: {a, b u c} = {a,b} u c + (-1)^{(p-1)q} b u {a,c}
    for (const auto& a : classes)
        for (const auto& b : classes)
            for (const auto& c : classes) {
                if (a.deg + b.deg < 1 || a.deg + c.deg < 1) continue;
                Cochain<K> lhs = bracket(ctx, a.c, cup(ctx, b.c, c.c));
                Cochain<K> r1 = cup(ctx, bracket(ctx, a.c, b.c), c.c);
                Cochain<K> r2 = cup(ctx, b.c, bracket(ctx, a.c, c.c));
                Matrix<K> rhs = r1.mat + ((((a.deg - 1) * b.deg) % 2 == 0) ? r2.mat : -r2.mat);
                Cochain<K> rhsC{lhs.degree, lhs.target, rhs};
                if (!same_class(ctx, lhs, rhsC))
                    rep.fail("bracket-leibniz", idx3(a.deg, b.deg, c.deg));
            }

    // representative independence: perturbing by a coboundary fixes the class
    for (const auto& a : classes) {
        if (a.deg == 0) continue;
        Cochain<K> h = random_cochain(ctx.barX, ctx.space(a.deg - 1), 31337 + a.deg);
        Cochain<K> a2 = a.c;
        a2.mat += delta(ctx.barX, h).mat;
        for (const auto& b : classes) {
            if (!same_class(ctx, cup(ctx, a2, b.c), cup(ctx, a.c, b.c)))
                rep.fail("cup-representative-independent", idx2(a.deg, b.deg));
            if (!same_class(ctx, bracket(ctx, a2, b.c), bracket(ctx, a.c, b.c)))
                rep.fail("bracket-representative-independent", idx2(a.deg, b.deg));
        }
    }

    return rep;
}

} // namespace gext
