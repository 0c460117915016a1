#pragma once

#include <memory>

#include "gext/rng.hpp"
#include "gext/yd.hpp"

namespace gext {

struct ResourceLimits {
    long max_ambient = 20000;
    int max_degree = 64;
};

/*
 * Bar_n(U, W) = U^{(x)_{A^op} (n+1)} (x)_{A^op} W, built as an iterated step
 * quotient: level n is the quotient of U (x) Bar_{n-1} by
 * u t(a) (x) v ~ u (x) t(a) v. Left U-module by multiplication on slot 0.
 * Every quotient basis vector lifts to a pure tuple (u^0, ..., u^n, w).
 */
template <class K>
struct BarLadder {
    const LeftBialgebroid<K>* B = nullptr;
    Module<K> W;
    ResourceLimits limits;

    struct Level {
        QuotientSpace<K> step;  // of U (x) prev
        int dim = 0;
        int prev_dim = 0;
        Module<K> mod;   // slot-0 left multiplication
        Matrix<K> d;     // Bar_n -> Bar_{n-1} (level 0: d = L towards W)
    };
    std::vector<Level> lv;

    void init(const LeftBialgebroid<K>* bg, Module<K> w, ResourceLimits lim = {}) {
        B = bg;
        W = std::move(w);
        limits = lim;
        lv.clear();
    }

    int built() const { return int(lv.size()) - 1; }
    int dim(int n) const { return lv[n].dim; }
    int tail_dim(int n) const { return n == 0 ? W.dim : lv[n - 1].dim; }

    void ensure(int n) {
        if (n > limits.max_degree) throw std::runtime_error("bar: degree cap exceeded");
        while (built() < n) {
            int k = built() + 1;
            const int prevDim = (k == 0) ? W.dim : lv[k - 1].dim;
            const Module<K>& prevMod = (k == 0) ? W : lv[k - 1].mod;
            long ambient = long(B->U.dim) * prevDim;
            if (ambient > limits.max_ambient) throw std::runtime_error("bar: ambient tensor cap exceeded");

            Level L;
            L.prev_dim = prevDim;
            L.step = balanced_tensor<K>(B->U.dim, prevDim, B->t_rmul, acts_via_t(*B, prevMod));
            L.dim = L.step.dim;

            L.mod.dim = L.dim;
            for (int i = 0; i < B->U.dim; ++i) {
                Matrix<K> mi(L.dim, L.dim);
                for (int j = 0; j < L.dim; ++j) {
                    int amb = L.step.rep_index[j];
                    int b = amb / prevDim, t = amb % prevDim;
                    Vec<K> ub = B->U.basis_mul(i, b);
                    Vec<K> out(L.dim, K(0));
                    for (int p = 0; p < B->U.dim; ++p)
                        if (!ub[p].is_zero()) L.step.accumulate(out, p * prevDim + t, ub[p]);
                    mi.set_col(j, out);
                }
                L.mod.act.push_back(mi);
            }
            lv.push_back(std::move(L));

            // differential
            Level& me = lv[k];
            if (k == 0) {
                // L: U (x) W -> W, u (x) w |-> u w
                me.d = Matrix<K>(W.dim, me.dim);
                for (int j = 0; j < me.dim; ++j) {
                    int amb = me.step.rep_index[j];
                    me.d.set_col(j, W.act[amb / prevDim].apply(unit_vec<K>(W.dim, amb % prevDim)));
                }
            } else {
                me.d = Matrix<K>(lv[k - 1].dim, me.dim);
                for (int j = 0; j < me.dim; ++j) {
                    std::vector<int> tup = tuple(k, j);
                    Vec<K> col(lv[k - 1].dim, K(0));
                    for (int i = 0; i <= k; ++i) {
                        Vec<K> face = face_value(k, tup, i);
                        if (i % 2 == 0) axpy(col, K(1), face);
                        else axpy(col, K(-1), face);
                    }
                    me.d.set_col(j, col);
                }
            }
        }
    }

    // pure tuple (u^0, ..., u^n, w) of quotient basis element j at level n
    std::vector<int> tuple(int n, int j) const {
        std::vector<int> out;
        int cur = j;
        for (int k = n; k >= 0; --k) {
            int amb = lv[k].step.rep_index[cur];
            out.push_back(amb / lv[k].prev_dim);
            cur = amb % lv[k].prev_dim;
        }
        out.push_back(cur);
        return out;
    }

    // project u (x) prev through one step quotient
    Vec<K> project_step(int level, const Vec<K>& u, const Vec<K>& prev) const {
        const Level& L = lv[level];
        Vec<K> out(L.dim, K(0));
        for (int i = 0; i < int(u.size()); ++i) {
            if (u[i].is_zero()) continue;
            for (int t = 0; t < L.prev_dim; ++t)
                if (!prev[t].is_zero()) L.step.accumulate(out, i * L.prev_dim + t, u[i] * prev[t]);
        }
        return out;
    }

    // project a full pure tensor with vector slots into Bar_n
    Vec<K> project(int n, const std::vector<Vec<K>>& uSlots, const Vec<K>& w) const {
        assert(int(uSlots.size()) == n + 1);
        Vec<K> cur = project_step(0, uSlots[n], w);
        for (int k = 1; k <= n; ++k) cur = project_step(k, uSlots[n - k], cur);
        return cur;
    }

    // columns: tail basis t |-> class(1_U (x) t) in Bar_n
    Matrix<K> one_tensor(int n) const {
        Matrix<K> m(lv[n].dim, tail_dim(n));
        for (int t = 0; t < tail_dim(n); ++t)
            m.set_col(t, project_step(n, B->U.unit, unit_vec<K>(tail_dim(n), t)));
        return m;
    }

    const Matrix<K>& d(int n) const { return lv[n].d; }

private:
    Vec<K> face_value(int n, const std::vector<int>& tup, int i) const {
        // slots 0..n are U-indices, slot n+1 the W-index
        std::vector<Vec<K>> slots;
        Vec<K> w;
        if (i < n) {
            for (int s = 0; s <= n; ++s) {
                if (s == i) slots.push_back(B->U.basis_mul(tup[i], tup[i + 1]));
                else if (s == i + 1) continue;
                else slots.push_back(unit_vec<K>(B->U.dim, tup[s]));
            }
            w = unit_vec<K>(W.dim, tup[n + 1]);
        } else {
            for (int s = 0; s < n; ++s) slots.push_back(unit_vec<K>(B->U.dim, tup[s]));
            w = W.act[tup[n]].apply(unit_vec<K>(W.dim, tup[n + 1]));
        }
        return project(n - 1, slots, w);
    }
};

/*
 * A degree-n cochain: a U-linear map Bar_n(U,W) -> M, stored as its full
 * matrix on the quotient basis. The target module is shared, not owned.
 */
template <class K>
struct Cochain {
    int degree = 0;
    const Module<K>* target = nullptr;
    Matrix<K> mat;

    bool operator==(const Cochain& o) const { return degree == o.degree && mat == o.mat; }
};

template <class K>
Cochain<K> zero_cochain(const BarLadder<K>& bar, int degree, const Module<K>& target) {
    return Cochain<K>{degree, &target, Matrix<K>(target.dim, bar.dim(degree))};
}

// delta = d^*: precompose with the bar differential.
template <class K>
Cochain<K> delta(BarLadder<K>& bar, const Cochain<K>& c) {
    bar.ensure(c.degree + 1);
    return Cochain<K>{c.degree + 1, c.target, c.mat * bar.d(c.degree + 1)};
}

// single coface delta_k = d_k^* (no sign)
template <class K>
Cochain<K> coface(BarLadder<K>& bar, const Cochain<K>& c, int k) {
    int n = c.degree + 1;
    bar.ensure(n);
    Matrix<K> dk(bar.dim(n - 1), bar.dim(n));
    const auto& B = *bar.B;
    for (int j = 0; j < bar.dim(n); ++j) {
        std::vector<int> tup = bar.tuple(n, j);
        std::vector<Vec<K>> slots;
        Vec<K> w;
        if (k < n) {
            for (int s = 0; s <= n; ++s) {
                if (s == k) slots.push_back(B.U.basis_mul(tup[k], tup[k + 1]));
                else if (s == k + 1) continue;
                else slots.push_back(unit_vec<K>(B.U.dim, tup[s]));
            }
            w = unit_vec<K>(bar.W.dim, tup[n + 1]);
        } else {
            for (int s = 0; s < n; ++s) slots.push_back(unit_vec<K>(B.U.dim, tup[s]));
            w = bar.W.act[tup[n]].apply(unit_vec<K>(bar.W.dim, tup[n + 1]));
        }
        dk.set_col(j, bar.project(n - 1, slots, w));
    }
    return Cochain<K>{n, c.target, c.mat * dk};
}

template <class K>
ValidationReport check_u_linear(const BarLadder<K>& bar, const Cochain<K>& c) {
    ValidationReport rep;
    for (int i = 0; i < bar.B->U.dim; ++i)
        if (c.mat * bar.lv[c.degree].mod.act[i] != c.target->act[i] * c.mat)
            rep.fail("cochain-u-linear", "basis " + std::to_string(i));
    return rep;
}

/*
 * Hom_U(Bar_n(U,W), M) parametrized by tail values: a U-linear cochain is
 * determined by f(v) := phi(1 (x) v) on the tail Bar_{n-1}, subject to
 * f(t(a) v) = t(a) f(v). Basis rows are canonical (RREF of the constraint
 * kernel), so coordinates are read off pivot columns.
 */
template <class K>
struct CochainSpace {
    int degree = 0;
    const Module<K>* target = nullptr;
    int tail_dim = 0;
    Subspace<K> fspace;  // in K^{target_dim * tail_dim}, row-major (r, t)

    int dim() const { return fspace.dim(); }
};

template <class K>
CochainSpace<K> cochain_space(const BarLadder<K>& bar, int degree, const Module<K>& target) {
    CochainSpace<K> S;
    S.degree = degree;
    S.target = &target;
    S.tail_dim = bar.tail_dim(degree);
    const Module<K>& tail = (degree == 0) ? bar.W : bar.lv[degree - 1].mod;
    int td = target.dim, nd = S.tail_dim;
    std::vector<SparseRow<K>> rows;
    for (int a = 0; a < bar.B->A.dim; ++a) {
        Matrix<K> Ta = tail.act_of(bar.B->t.col(a));
        Matrix<K> Ma = target.act_of(bar.B->t.col(a));
        // constraint: f . Ta - Ma . f = 0, entries indexed (r, c)
        for (int r = 0; r < td; ++r)
            for (int c = 0; c < nd; ++c) {
                Vec<K> row(td * nd, K(0));
                for (int c2 = 0; c2 < nd; ++c2) row[r * nd + c2] += Ta(c2, c);
                for (int r2 = 0; r2 < td; ++r2) row[r2 * nd + c] -= Ma(r, r2);
                auto sp = to_sparse(row);
                if (!sp.empty()) rows.push_back(std::move(sp));
            }
    }
    Matrix<K> constraint(int(rows.size()), td * nd);
    // kernel() expects a dense matrix; assemble from sparse rows
    for (int i = 0; i < int(rows.size()); ++i)
        for (const auto& [j, v] : rows[i]) constraint(i, j) = v;
    S.fspace = kernel(constraint);
    return S;
}

// tail-value matrix -> full cochain (U-linear extension phi(u (x) v) = u f(v))
template <class K>
Cochain<K> cochain_from_tail(const BarLadder<K>& bar, int degree, const Module<K>& target,
                             const Matrix<K>& f) {
    const auto& L = bar.lv[degree];
    Matrix<K> m(target.dim, L.dim);
    for (int j = 0; j < L.dim; ++j) {
        int amb = L.step.rep_index[j];
        m.set_col(j, target.act[amb / L.prev_dim].apply(f.col(amb % L.prev_dim)));
    }
    return Cochain<K>{degree, &target, m};
}

// restriction phi |-> f, f(v) = phi(1 (x) v)
template <class K>
Matrix<K> cochain_to_tail(const BarLadder<K>& bar, const Cochain<K>& c) {
    return c.mat * bar.one_tensor(c.degree);
}

// The spec's constructor: extend normalized values U-linearly; reject data
// inconsistent with the quotient relations, naming a witness.
template <class K>
Cochain<K> cochain_from_normalized(const BarLadder<K>& bar, int degree, const Module<K>& target,
                                   const Matrix<K>& f, ValidationReport* report = nullptr) {
    Cochain<K> c = cochain_from_tail(bar, degree, target, f);
    ValidationReport rep = check_u_linear(bar, c);
    Matrix<K> back = cochain_to_tail(bar, c);
    if (back != f) rep.fail("normalized-roundtrip", "restriction of extension differs");
    if (report) *report = rep;
    else if (!rep.ok())
        throw std::runtime_error("cochain_from_normalized: inconsistent values: " +
                                 rep.failures[0].axiom + " @ " + rep.failures[0].witness);
    return c;
}

// coordinates in the canonical f-space basis, or nullopt if not U-linear
template <class K>
std::optional<Vec<K>> cochain_coords(const BarLadder<K>& bar, const CochainSpace<K>& S,
                                     const Cochain<K>& c) {
    Matrix<K> f = cochain_to_tail(bar, c);
    Vec<K> flat(size_t(S.target->dim) * S.tail_dim);
    for (int r = 0; r < S.target->dim; ++r)
        for (int t = 0; t < S.tail_dim; ++t) flat[r * S.tail_dim + t] = f(r, t);
    Vec<K> coords(S.dim(), K(0));
    SparseRow<K> resid = to_sparse(flat);
    for (int i = 0; i < S.dim(); ++i) {
        int piv = S.fspace.basis[i][0].first;
        // read off pivot coefficient
        for (const auto& [j, v] : resid)
            if (j == piv) {
                coords[i] = v;
                break;
            }
        if (!coords[i].is_zero()) resid = detail::sparse_axpy(resid, -coords[i], S.fspace.basis[i]);
    }
    if (!resid.empty()) return std::nullopt;
    return coords;
}

template <class K>
Cochain<K> cochain_from_coords(const BarLadder<K>& bar, const CochainSpace<K>& S, const Vec<K>& coords) {
    Matrix<K> f(S.target->dim, S.tail_dim);
    for (int i = 0; i < S.dim(); ++i)
        if (!coords[i].is_zero())
            for (const auto& [j, v] : S.fspace.basis[i])
                f(j / S.tail_dim, j % S.tail_dim) += coords[i] * v;
    return cochain_from_tail(bar, S.degree, *S.target, f);
}

// Deterministic seeded sample from the U-linear cochain space.
template <class K>
Cochain<K> random_cochain(const BarLadder<K>& bar, const CochainSpace<K>& S, uint64_t seed) {
    Rng rng(seed);
    Vec<K> coords(S.dim());
    for (auto& c : coords) c = rng.template small_scalar<K>();
    return cochain_from_coords(bar, S, coords);
}

// delta as a matrix between coordinate spaces C^n -> C^{n+1}
template <class K>
Matrix<K> delta_matrix(BarLadder<K>& bar, const CochainSpace<K>& Sn, const CochainSpace<K>& Sn1) {
    Matrix<K> m(Sn1.dim(), Sn.dim());
    for (int j = 0; j < Sn.dim(); ++j) {
        Vec<K> e(Sn.dim(), K(0));
        e[j] = K(1);
        Cochain<K> c = cochain_from_coords(bar, Sn, e);
        auto coords = cochain_coords(bar, Sn1, delta(bar, c));
        if (!coords) throw std::logic_error("delta image left the cochain space");
        m.set_col(j, *coords);
    }
    return m;
}

} // namespace gext
