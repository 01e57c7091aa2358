#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: different algorithm, same answer.

#include <hensel/poly.hpp>
#include <hensel/value.hpp>
#include <hensel/valued_field.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace oracles {

using hensel::Poly;
using hensel::Value;

/// Determinant over a field by Gaussian elimination with row swaps.
template <class K>
K gauss_det(std::vector<std::vector<K>> m, const K& one) {
    const size_t n = m.size();
    K det = one;
    bool neg = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && hensel::is_zero_elem(m[piv][col])) ++piv;
        if (piv == n) return hensel::zero_like(one);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            neg = !neg;
        }
        det = det * m[col][col];
        const K inv = one / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (hensel::is_zero_elem(m[r][col])) continue;
            const K factor = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return neg ? hensel::zero_like(one) - det : det;
}

/// Brute-force Newton polygon: enumerate every subsequence of finite points
/// that starts at the least finite index and ends at the last one, and keep
/// the (unique) subsequence satisfying the three slope conditions verbatim:
/// for consecutive vertices (k,vk),(l,vl) with joining slope s,
///   - slope from any finite (i,vi), i<k, up to (k,vk) is < s,
///   - slope from (k,vk) to any finite interior (i,vi) is >= s,
///   - slope from (l,vl) to any finite (i,vi), i>l, is > s.
/// Returns the vertex indices. Throws unless exactly one candidate passes.
inline std::vector<int> brute_polygon_vertices(const std::vector<Value>& vals) {
    std::vector<int> finite;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i].is_finite()) finite.push_back(static_cast<int>(i));
    if (finite.empty() || finite.back() != static_cast<int>(vals.size()) - 1)
        throw std::invalid_argument("brute_polygon_vertices: bad input");

    auto slope_lt = [&](int i0, int i1, int j0, int j1) {
        // slope(i0,i1) < slope(j0,j1), all pairs with i0<i1, j0<j1
        const long long a = vals[static_cast<size_t>(i1)].amount() -
                            vals[static_cast<size_t>(i0)].amount();
        const long long b = vals[static_cast<size_t>(j1)].amount() -
                            vals[static_cast<size_t>(j0)].amount();
        return a * (j1 - j0) < b * (i1 - i0);
    };
    auto slope_le = [&](int i0, int i1, int j0, int j1) {
        const long long a = vals[static_cast<size_t>(i1)].amount() -
                            vals[static_cast<size_t>(i0)].amount();
        const long long b = vals[static_cast<size_t>(j1)].amount() -
                            vals[static_cast<size_t>(j0)].amount();
        return a * (j1 - j0) <= b * (i1 - i0);
    };

    const size_t mid = finite.size() >= 2 ? finite.size() - 2 : 0;
    std::vector<int> winner;
    int winners = 0;
    for (size_t mask = 0; mask < (size_t{1} << mid); ++mask) {
        std::vector<int> cand{finite.front()};
        for (size_t b = 0; b < mid; ++b)
            if (mask & (size_t{1} << b)) cand.push_back(finite[b + 1]);
        if (finite.size() >= 2) cand.push_back(finite.back());

        bool ok = true;
        for (size_t s = 0; ok && s + 1 < cand.size(); ++s) {
            const int k = cand[s], l = cand[s + 1];
            for (int i : finite) {
                if (i < k && !slope_lt(i, k, k, l)) ok = false;        // strict left
                if (i > k && i < l && !slope_le(k, l, k, i)) ok = false;  // on-or-above
                if (i > l && !slope_lt(k, l, l, i)) ok = false;        // strict right
            }
        }
        if (ok) {
            ++winners;
            winner = cand;
        }
    }
    if (winners != 1)
        throw std::logic_error("brute_polygon_vertices: conditions did not pin down one hull");
    return winner;
}

/// Every root of f modulo p^N, by exhaustive search over all residues.
/// Coefficients must lie in the valuation ring.
inline std::vector<hensel::Int> padic_roots_mod(const std::vector<hensel::Int>& coeffs,
                                                const hensel::Int& modulus) {
    std::vector<hensel::Int> roots;
    for (hensel::Int r = 0; r < modulus; ++r) {
        hensel::Int acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = (acc * r + coeffs[i]) % modulus;
        if (acc == 0) roots.push_back(r);
    }
    return roots;
}

/// Digit-by-digit power-series solve of f(x) = 0 with x ≡ 0 (mod t): each
/// coefficient of x is forced by a linear equation with the unit f'(0) as
/// pivot. A different algorithm from quadratic Newton lifting, and a
/// constructive uniqueness proof at the same time.
template <class CF>
hensel::Poly<typename CF::Elem> tadic_series_solve(
    const hensel::TadicField<CF>& K,
    const hensel::Poly<hensel::RatFunc<typename CF::Elem>>& f, int N) {
    using C = typename CF::Elem;
    using Rep = hensel::Poly<C>;
    std::vector<Rep> fc, dc;
    const auto df = f.derivative();
    for (const auto& c : f.coeffs()) fc.push_back(K.truncate(c, N));
    for (const auto& c : df.coeffs()) dc.push_back(K.truncate(c, N));
    auto eval = [&](const std::vector<Rep>& cs, const Rep& x) {
        Rep r = K.tzero(N);
        for (size_t i = cs.size(); i-- > 0;) r = K.tadd(K.tmul(r, x, N), cs[i], N);
        return r;
    };
    const C one = K.coeff_field().one();
    const C zero = hensel::zero_like(one);
    Rep x = K.tzero(N);
    for (int k = 1; k < N; ++k) {
        const Rep fx = eval(fc, x);
        const C ck = fx.coeff_or(k, zero);
        if (hensel::is_zero_elem(ck)) continue;
        const Rep dfx = eval(dc, x);
        const C pivot = dfx.coeff_or(0, zero);
        if (hensel::is_zero_elem(pivot))
            throw std::logic_error("tadic_series_solve: derivative not a unit");
        const C xk = zero - ck / pivot;
        x = K.tadd(x, hensel::Poly<C>::monomial(xk, k), N);
    }
    if (!K.tis_zero(eval(fc, x)))
        throw std::logic_error("tadic_series_solve: no solution at this precision");
    return x;
}

/// Every zero of f modulo t^N with the prescribed residue digit, by
/// exhaustive search over all q^(N-1) truncated series over F_q.
inline std::vector<hensel::Poly<hensel::Fp>> fq_tadic_roots(
    const hensel::TadicField<hensel::PrimeCoeffField>& K,
    const hensel::Poly<hensel::RatFunc<hensel::Fp>>& f, int N, long long residue) {
    using Rep = hensel::Poly<hensel::Fp>;
    const long long q = K.coeff_field().q;
    std::vector<Rep> fc;
    for (const auto& c : f.coeffs()) fc.push_back(K.truncate(c, N));

    std::vector<Rep> roots;
    std::vector<long long> digits(static_cast<size_t>(N - 1), 0);
    while (true) {
        std::vector<hensel::Fp> cs;
        cs.emplace_back(residue, q);
        for (long long d : digits) cs.emplace_back(d, q);
        Rep x{std::vector<hensel::Fp>(cs)};
        Rep r = K.tzero(N);
        for (size_t i = fc.size(); i-- > 0;) r = K.tadd(K.tmul(r, x, N), fc[i], N);
        if (K.tis_zero(r)) roots.push_back(std::move(x));

        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return roots;
}

/// Resultant as the determinant of the Sylvester matrix; the textbook
/// definition, used as the oracle for the remainder-sequence implementation.
template <class K>
K sylvester_resultant(const Poly<K>& f, const Poly<K>& g, const K& one) {
    const int df = f.degree(), dg = g.degree();
    if (df < 0) throw std::invalid_argument("sylvester_resultant: zero f");
    if (dg < 0) return df == 0 ? one : hensel::zero_like(one);
    const size_t n = static_cast<size_t>(df + dg);
    if (n == 0) return one;
    const K zero = hensel::zero_like(one);
    std::vector<std::vector<K>> m(n, std::vector<K>(n, zero));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i) m[row][row + i] = f[df - i];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i) m[dg + row][row + i] = g[dg - i];
    return gauss_det(std::move(m), one);
}

}  // namespace oracles
