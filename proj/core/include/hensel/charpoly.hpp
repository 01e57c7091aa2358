#pragma once

#include "hensel/poly.hpp"

#include <vector>

namespace hensel {

/// Determinant by cofactor expansion. Division-free, so it is valid over any
/// commutative ring, including rings with zero divisors.
template <class R>
R det_ring(const std::vector<std::vector<R>>& m, const R& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    R acc = zero_like(one);
    for (size_t j = 0; j < n; ++j) {
        if (is_zero_elem(m[0][j])) continue;
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        R term = m[0][j] * det_ring(minor, one);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Characteristic polynomial of multiplication by q on the free module
/// K[X]/(f) with basis 1, X, ..., X^(n-1); f must be monic of degree n >= 1.
/// The result is monic of degree n and annihilates q modulo f
/// (Cayley-Hamilton over an arbitrary commutative ring).
template <class K>
Poly<K> char_poly(const Poly<K>& q, const Poly<K>& f, const K& one) {
    if (!f.is_monic()) throw std::invalid_argument("char_poly: modulus not monic");
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("char_poly: modulus must have degree >= 1");
    const K zero = zero_like(one);

    const Poly<K> qr = divmod_monic(q, f).second;
    Poly<K> x = Poly<K>::monomial(one, 1);

    // Column j holds the coordinates of q * X^j mod f.
    std::vector<std::vector<K>> a(static_cast<size_t>(n),
                                  std::vector<K>(static_cast<size_t>(n), zero));
    Poly<K> col = qr;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff_or(i, zero);
        if (j + 1 < n) col = divmod_monic(col * x, f).second;
    }

    // det(T*I - A) over K[T].
    using PT = Poly<K>;
    std::vector<std::vector<PT>> m(static_cast<size_t>(n), std::vector<PT>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<K> e;
            e.push_back(zero - a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (i == j) e.push_back(one);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = PT(std::move(e));
        }
    return det_ring(m, PT::constant(one));
}

}  // namespace hensel
