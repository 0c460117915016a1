#pragma once

#include "gext/bialgebroid.hpp"

namespace gext::fixtures {

// k[x]/(x^2): basis (1, x), x*x = 0.
template <class K>
FiniteAlgebra<K> dual_numbers() {
    std::vector<Vec<K>> t = {
        {K(1), K(0)}, {K(0), K(1)},
        {K(0), K(1)}, {K(0), K(0)}};
    return FiniteAlgebra<K>::make(2, t, {K(1), K(0)});
}

// k[x]/(x^2-1) = group algebra of C2: basis (1, g), g*g = 1.
template <class K>
FiniteAlgebra<K> group_algebra_c2() {
    std::vector<Vec<K>> t = {
        {K(1), K(0)}, {K(0), K(1)},
        {K(0), K(1)}, {K(1), K(0)}};
    return FiniteAlgebra<K>::make(2, t, {K(1), K(0)});
}

// Group-like coproduct on k[C2]: Delta(g) = g (x) g, eps(g) = 1.
template <class K>
LeftBialgebroid<K> c2_bialgebroid() {
    auto h = group_algebra_c2<K>();
    Matrix<K> delta(4, 2);
    delta(0, 0) = K(1);  // Delta(1) = 1 (x) 1
    delta(3, 1) = K(1);  // Delta(g) = g (x) g
    Matrix<K> eps(1, 2);
    eps(0, 0) = K(1);
    eps(0, 1) = K(1);
    return from_bialgebra(h, delta, eps);
}

// Dual numbers with primitive x: Delta(x) = x (x) 1 + 1 (x) x, eps(x) = 0.
template <class K>
LeftBialgebroid<K> dual_numbers_bialgebra() {
    auto h = dual_numbers<K>();
    Matrix<K> delta(4, 2);
    delta(0, 0) = K(1);
    delta(2, 1) = K(1);  // x (x) 1
    delta(1, 1) = K(1);  // 1 (x) x
    Matrix<K> eps(1, 2);
    eps(0, 0) = K(1);
    return from_bialgebra(h, delta, eps);
}

} // namespace gext::fixtures
