#pragma once

// Test-only oracles, independent of the engine's evaluation path:
// classical Hochschild cochains Hom_k(A^{(x)n}, A) with the textbook
// differential, insertion operations, and cup product.

#include "gext/operad.hpp"

namespace oracle {

using namespace gext;

// classical n-cochain on A: matrix dimA x dimA^n, columns = basis tuples
template <class K>
struct HCochain {
    int degree = 0;
    Matrix<K> mat;
};

template <class K>
long pow_dim(int dim, int n) {
    long r = 1;
    while (n-- > 0) r *= dim;
    return r;
}

template <class K>
Vec<K> heval(const FiniteAlgebra<K>& A, const HCochain<K>& c, const std::vector<Vec<K>>& args) {
    // multilinear evaluation
    long cols = pow_dim<K>(A.dim, c.degree);
    Vec<K> out(A.dim, K(0));
    std::vector<int> idx(c.degree, 0);
    for (long col = 0; col < cols; ++col) {
        long rem = col;
        K coef(1);
        for (int s = c.degree - 1; s >= 0; --s) {
            idx[s] = int(rem % A.dim);
            rem /= A.dim;
        }
        for (int s = 0; s < c.degree; ++s) coef *= args[s][idx[s]];
        if (!coef.is_zero()) axpy(out, coef, c.mat.col(int(col)));
    }
    return out;
}

// classical Hochschild differential
template <class K>
HCochain<K> hdelta(const FiniteAlgebra<K>& A, const HCochain<K>& c) {
    int n = c.degree;
    HCochain<K> out{n + 1, Matrix<K>(A.dim, int(pow_dim<K>(A.dim, n + 1)))};
    long cols = pow_dim<K>(A.dim, n + 1);
    for (long col = 0; col < cols; ++col) {
        std::vector<int> idx(n + 1);
        long rem = col;
        for (int s = n; s >= 0; --s) {
            idx[s] = int(rem % A.dim);
            rem /= A.dim;
        }
        std::vector<Vec<K>> args;
        for (int s = 0; s <= n; ++s) args.push_back(unit_vec<K>(A.dim, idx[s]));
        Vec<K> v(A.dim, K(0));
        // a1 c(a2..an+1)
        {
            std::vector<Vec<K>> sub(args.begin() + 1, args.end());
            axpy(v, K(1), A.mul(args[0], heval(A, c, sub)));
        }
        for (int i = 0; i < n; ++i) {
            std::vector<Vec<K>> sub;
            for (int s = 0; s <= n; ++s) {
                if (s == i) sub.push_back(A.mul(args[i], args[i + 1]));
                else if (s == i + 1) continue;
                else sub.push_back(args[s]);
            }
            K sign = (i % 2 == 0) ? K(-1) : K(1);
            axpy(v, sign, heval(A, c, sub));
        }
        {
            std::vector<Vec<K>> sub(args.begin(), args.end() - 1);
            K sign = (n % 2 == 0) ? K(-1) : K(1);
            axpy(v, sign, A.mul(heval(A, c, sub), args[n]));
        }
        out.mat.set_col(int(col), v);
    }
    return out;
}

// classical Gerstenhaber insertion
template <class K>
HCochain<K> hinsert(const FiniteAlgebra<K>& A, const HCochain<K>& f, const HCochain<K>& g, int i) {
    int p = f.degree, q = g.degree, n = p + q - 1;
    HCochain<K> out{n, Matrix<K>(A.dim, int(pow_dim<K>(A.dim, n)))};
    long cols = pow_dim<K>(A.dim, n);
    for (long col = 0; col < cols; ++col) {
        std::vector<int> idx(n);
        long rem = col;
        for (int s = n - 1; s >= 0; --s) {
            idx[s] = int(rem % A.dim);
            rem /= A.dim;
        }
        std::vector<Vec<K>> inner;
        for (int s = i - 1; s <= i + q - 2; ++s) inner.push_back(unit_vec<K>(A.dim, idx[s]));
        Vec<K> gval = heval(A, g, inner);
        std::vector<Vec<K>> outer;
        for (int s = 0; s < i - 1; ++s) outer.push_back(unit_vec<K>(A.dim, idx[s]));
        outer.push_back(gval);
        for (int s = i + q - 1; s < n; ++s) outer.push_back(unit_vec<K>(A.dim, idx[s]));
        out.mat.set_col(int(col), heval(A, f, outer));
    }
    return out;
}

template <class K>
HCochain<K> hcup(const FiniteAlgebra<K>& A, const HCochain<K>& f, const HCochain<K>& g) {
    int p = f.degree, q = g.degree, n = p + q;
    HCochain<K> out{n, Matrix<K>(A.dim, int(pow_dim<K>(A.dim, n)))};
    long cols = pow_dim<K>(A.dim, n);
    for (long col = 0; col < cols; ++col) {
        std::vector<int> idx(n);
        long rem = col;
        for (int s = n - 1; s >= 0; --s) {
            idx[s] = int(rem % A.dim);
            rem /= A.dim;
        }
        std::vector<Vec<K>> fa, ga;
        for (int s = 0; s < p; ++s) fa.push_back(unit_vec<K>(A.dim, idx[s]));
        for (int s = p; s < n; ++s) ga.push_back(unit_vec<K>(A.dim, idx[s]));
        out.mat.set_col(int(col), A.mul(heval(A, f, fa), heval(A, g, ga)));
    }
    return out;
}

// identification Hom_U(Bar_n(U,X), Z) -> Hom_k(A^{(x)n}, A) for U = A^e,
// X = Z = A with unit coefficients: phi_cl(a1..an) = phi(1, s(a1)..s(an), 1)
template <class K>
HCochain<K> to_classical(const OperadContext<K>& ctx, const Cochain<K>& c) {
    const auto& B = *ctx.B;
    const auto& A = B.A;
    int n = c.degree;
    HCochain<K> out{n, Matrix<K>(A.dim, int(pow_dim<K>(A.dim, n)))};
    long cols = pow_dim<K>(A.dim, n);
    for (long col = 0; col < cols; ++col) {
        std::vector<int> idx(n);
        long rem = col;
        for (int s = n - 1; s >= 0; --s) {
            idx[s] = int(rem % A.dim);
            rem /= A.dim;
        }
        std::vector<Vec<K>> slots{B.U.unit};
        for (int s = 0; s < n; ++s) slots.push_back(B.s.col(idx[s]));
        Vec<K> one = unit_vec<K>(ctx.C.X.mod.dim, 0);
        // X = A: the unit of A as a basis combination
        Vec<K> xunit(ctx.C.X.mod.dim, K(0));
        for (int t = 0; t < A.dim; ++t) xunit[t] = A.unit[t];
        out.mat.set_col(int(col), c.mat.apply(ctx.barX.project(n, slots, xunit)));
    }
    return out;
}

} // namespace oracle
