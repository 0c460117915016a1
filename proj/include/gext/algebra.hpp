#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gext/linalg.hpp"

namespace gext {

// One finding of a validation run: which axiom broke and where.
struct Failure {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string axiom, std::string witness) {
        failures.push_back({std::move(axiom), std::move(witness)});
    }
    void merge(const ValidationReport& o, const std::string& prefix) {
        for (const auto& f : o.failures)
            failures.push_back({prefix + "." + f.axiom, f.witness});
    }
};

inline std::string idx2(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
inline std::string idx3(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Finite-dimensional unital associative algebra given by structure constants:
// e_i e_j = sum_k c[i][j][k] e_k.
template <class K>
struct FiniteAlgebra {
    int dim = 0;
    Vec<K> unit;                    // coordinates of 1
    std::vector<Matrix<K>> lmul;    // lmul[i] = matrix of x -> e_i x

    static FiniteAlgebra make(int dim, const std::vector<Vec<K>>& mult_table, Vec<K> unit) {
        // mult_table[(i*dim)+j] = coordinates of e_i e_j
        if (int(mult_table.size()) != dim * dim)
            throw std::invalid_argument("make_algebra: need dim^2 product rows");
        for (const auto& row : mult_table)
            if (int(row.size()) != dim) throw std::invalid_argument("make_algebra: product row has wrong length");
        if (int(unit.size()) != dim) throw std::invalid_argument("make_algebra: unit has wrong length");
        FiniteAlgebra a;
        a.dim = dim;
        a.unit = std::move(unit);
        a.lmul.assign(dim, Matrix<K>(dim, dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) a.lmul[i](k, j) = mult_table[i * dim + j][k];
        return a;
    }

    static FiniteAlgebra ground_field() {
        return make(1, {Vec<K>{K(1)}}, Vec<K>{K(1)});
    }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> r(dim, K(0));
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            axpy(r, x[i], lmul[i].apply(y));
        }
        return r;
    }

    Vec<K> basis_mul(int i, int j) const { return lmul[i].col(j); }

    // matrix of x -> v x
    Matrix<K> lmul_by(const Vec<K>& v) const {
        Matrix<K> m(dim, dim);
        for (int i = 0; i < dim; ++i)
            if (!v[i].is_zero()) m += v[i] * lmul[i];
        return m;
    }
    // matrix of x -> x v
    Matrix<K> rmul_by(const Vec<K>& v) const {
        return matrix_from_columns<K>(dim, dim, [&](int j) { return mul(unit_vec<K>(dim, j), v); });
    }

    FiniteAlgebra opposite() const {
        std::vector<Vec<K>> table(dim * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) table[i * dim + j] = basis_mul(j, i);
        FiniteAlgebra op = make(dim, table, unit);
        return op;
    }
};

// Exhaustive axiom check on all basis tuples; every failure is reported with
// the offending indices.
template <class K>
ValidationReport check_algebra(const FiniteAlgebra<K>& a) {
    ValidationReport rep;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec<K> lhs = a.mul(a.basis_mul(i, j), unit_vec<K>(a.dim, k));
                Vec<K> rhs = a.mul(unit_vec<K>(a.dim, i), a.basis_mul(j, k));
                if (lhs != rhs) rep.fail("associativity", idx3(i, j, k));
            }
    for (int i = 0; i < a.dim; ++i) {
        if (a.mul(a.unit, unit_vec<K>(a.dim, i)) != unit_vec<K>(a.dim, i))
            rep.fail("left-unit", std::to_string(i));
        if (a.mul(unit_vec<K>(a.dim, i), a.unit) != unit_vec<K>(a.dim, i))
            rep.fail("right-unit", std::to_string(i));
    }
    return rep;
}

// (A,B)-bimodule: commuting unital left A-action and right B-action.
template <class K>
struct Bimodule {
    int dim = 0;
    std::vector<Matrix<K>> left_act;   // per basis of the left base
    std::vector<Matrix<K>> right_act;  // per basis of the right base

    Matrix<K> left_by(const Vec<K>& a) const {
        Matrix<K> m(dim, dim);
        for (int i = 0; i < int(left_act.size()); ++i)
            if (!a[i].is_zero()) m += a[i] * left_act[i];
        return m;
    }
    Matrix<K> right_by(const Vec<K>& b) const {
        Matrix<K> m(dim, dim);
        for (int i = 0; i < int(right_act.size()); ++i)
            if (!b[i].is_zero()) m += b[i] * right_act[i];
        return m;
    }

    static Bimodule regular(const FiniteAlgebra<K>& a) {
        Bimodule m;
        m.dim = a.dim;
        for (int i = 0; i < a.dim; ++i) {
            m.left_act.push_back(a.lmul[i]);
            m.right_act.push_back(a.rmul_by(unit_vec<K>(a.dim, i)));
        }
        return m;
    }
};

template <class K>
ValidationReport check_bimodule(const Bimodule<K>& m, const FiniteAlgebra<K>& left_base,
                                const FiniteAlgebra<K>& right_base) {
    ValidationReport rep;
    auto unital = [&](const std::vector<Matrix<K>>& act, const FiniteAlgebra<K>& base, const char* side) {
        Matrix<K> u(m.dim, m.dim);
        for (int i = 0; i < base.dim; ++i)
            if (!base.unit[i].is_zero()) u += base.unit[i] * act[i];
        if (u != Matrix<K>::identity(m.dim)) rep.fail(std::string(side) + "-unital", "");
    };
    unital(m.left_act, left_base, "left");
    unital(m.right_act, right_base, "right");
    for (int i = 0; i < left_base.dim; ++i)
        for (int j = 0; j < left_base.dim; ++j) {
            Matrix<K> prod = m.left_by(left_base.basis_mul(i, j));
            if (m.left_act[i] * m.left_act[j] != prod) rep.fail("left-associative", idx2(i, j));
        }
    for (int i = 0; i < right_base.dim; ++i)
        for (int j = 0; j < right_base.dim; ++j) {
            Matrix<K> prod = m.right_by(right_base.basis_mul(i, j));
            if (m.right_act[j] * m.right_act[i] != prod) rep.fail("right-associative", idx2(i, j));
        }
    for (int i = 0; i < left_base.dim; ++i)
        for (int j = 0; j < right_base.dim; ++j)
            if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i])
                rep.fail("actions-commute", idx2(i, j));
    return rep;
}

// Balanced tensor product over a base: quotient of the k-tensor square grid by
//   (L_a m) (x) n  -  m (x) (R_a n)   for all base basis elements a.
// Callers choose which actions pair across the tensor sign, so one builder
// serves (x)_A, (x)_{A^op}, Takeuchi homes, and coaction targets alike.
template <class K>
QuotientSpace<K> balanced_tensor(int dimL, int dimR, const std::vector<Matrix<K>>& Lmaps,
                                 const std::vector<Matrix<K>>& Rmaps) {
    int ambient = dimL * dimR;
    std::vector<SparseRow<K>> rels;
    for (size_t a = 0; a < Lmaps.size(); ++a) {
        const Matrix<K>& L = Lmaps[a];
        const Matrix<K>& R = Rmaps[a];
        for (int l = 0; l < dimL; ++l)
            for (int r = 0; r < dimR; ++r) {
                SparseRow<K> row;
                for (int l2 = 0; l2 < dimL; ++l2)
                    if (!L(l2, l).is_zero()) row.emplace_back(l2 * dimR + r, L(l2, l));
                for (int r2 = 0; r2 < dimR; ++r2)
                    if (!R(r2, r).is_zero()) row.emplace_back(l * dimR + r2, -R(r2, r));
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                // collapse duplicate columns (diagonal overlap)
                SparseRow<K> out;
                for (auto& [c, v] : row) {
                    if (!out.empty() && out.back().first == c) out.back().second += v;
                    else out.emplace_back(c, v);
                }
                out.erase(std::remove_if(out.begin(), out.end(),
                                         [](const auto& e) { return e.second.is_zero(); }),
                          out.end());
                if (!out.empty()) rels.push_back(std::move(out));
            }
    }
    return quotient(ambient, Subspace<K>::span(ambient, std::move(rels)));
}

// Projects a pure tensor of vectors into the balanced quotient.
template <class K>
Vec<K> project_pair(const QuotientSpace<K>& q, int dimR, const Vec<K>& l, const Vec<K>& r) {
    Vec<K> out(q.dim, K(0));
    for (int i = 0; i < int(l.size()); ++i) {
        if (l[i].is_zero()) continue;
        for (int j = 0; j < dimR; ++j) {
            if (r[j].is_zero()) continue;
            q.accumulate(out, i * dimR + j, l[i] * r[j]);
        }
    }
    return out;
}

// Checks k-linearity plus the declared equivariances of a candidate morphism;
// the first offending basis pair is named in the report.
template <class K>
ValidationReport check_equivariant(const Matrix<K>& f, const std::vector<Matrix<K>>& src_act,
                                   const std::vector<Matrix<K>>& dst_act, const char* label) {
    ValidationReport rep;
    for (size_t i = 0; i < src_act.size(); ++i)
        if (f * src_act[i] != dst_act[i] * f)
            rep.fail(std::string(label) + "-equivariance", "basis " + std::to_string(i));
    return rep;
}

} // namespace gext
