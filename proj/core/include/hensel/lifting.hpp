#pragma once

#include "hensel/newton_polygon.hpp"
#include "hensel/valued_field.hpp"

namespace hensel {

template <class F>
using FieldPoly = Poly<typename F::Elem>;

template <class F>
bool coeffs_in_valuation_ring(const FieldPoly<F>& f, const F& K) {
    for (const auto& c : f.coeffs())
        if (K.valuation(c) < Value(0)) return false;
    return true;
}

/// Shape shared by Nagata polynomials and the intermediate f = h(1+X) of the
/// transformation chain (which need not be monic): coefficients in V,
/// residually-unit linear term, residually-zero constant term. Such a
/// polynomial has a unique zero congruent to 0 modulo the maximal ideal.
template <class F>
bool has_hensel_shape_at_zero(const FieldPoly<F>& f, const F& K) {
    if (f.degree() < 1) return false;
    if (!coeffs_in_valuation_ring(f, K)) return false;
    const auto zero = K.zero();
    if (K.valuation(f.coeff_or(1, zero)) != Value(0)) return false;
    return K.valuation(f.coeff_or(0, zero)) > Value(0);
}

/// Nagata polynomial: monic with the hensel shape at 0.
template <class F>
bool is_nagata(const FieldPoly<F>& f, const F& K) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("is_nagata: polynomial must be monic of degree >= 1");
    if (!coeffs_in_valuation_ring(f, K))
        throw std::invalid_argument("is_nagata: coefficient outside the valuation ring");
    const auto zero = K.zero();
    return K.valuation(f.coeff_or(1, zero)) == Value(0) &&
           K.valuation(f.coeff_or(0, zero)) > Value(0);
}

/// Special polynomial: X^n - X^{n-1} + t_{n-2}X^{n-2} + ... + t_0 with every
/// t_i in the maximal ideal. Its unique zero congruent to 1 is the "special
/// zero"; all other zeros lie in m.
template <class F>
bool is_special(const FieldPoly<F>& t, const F& K) {
    const int n = t.degree();
    if (n < 1 || !t.is_monic()) return false;
    if (!coeffs_in_valuation_ring(t, K)) return false;
    const auto zero = K.zero();
    const auto minus_one = K.zero() - K.one();
    if (!(t.coeff_or(n - 1, zero) == minus_one)) return false;
    for (int i = 0; i <= n - 2; ++i)
        if (!(K.valuation(t.coeff_or(i, zero)) > Value(0))) return false;
    return true;
}

namespace detail {

/// Coefficients of f as truncated representatives; requires f over V.
template <class F>
std::vector<typename F::Rep> truncate_coeffs(const FieldPoly<F>& f, const F& K, int N) {
    std::vector<typename F::Rep> out;
    out.reserve(static_cast<size_t>(f.degree() + 1));
    for (const auto& c : f.coeffs()) out.push_back(K.truncate(c, N));
    return out;
}

template <class F>
typename F::Rep trunc_eval(const std::vector<typename F::Rep>& c, const typename F::Rep& x,
                           const F& K, int N) {
    typename F::Rep r = K.tzero(N);
    for (size_t i = c.size(); i-- > 0;) r = K.tadd(K.tmul(r, x, N), c[i], N);
    return r;
}

/// Newton iteration x <- x - f(x)/f'(x) in the truncated completion, from a
/// seed where f vanishes residually and f' is a unit. Quadratic convergence
/// makes the iteration count logarithmic in N.
template <class F>
typename F::Rep newton_zero(const FieldPoly<F>& f, const typename F::Elem& seed, const F& K,
                            int N) {
    const auto fc = truncate_coeffs(f, K, N);
    const auto dc = truncate_coeffs(f.derivative(), K, N);
    typename F::Rep x = K.truncate(seed, N);
    for (int round = 0; round < 64; ++round) {
        const auto fx = trunc_eval(fc, x, K, N);
        if (K.tis_zero(fx)) return x;
        x = K.tsub(x, K.tdiv(fx, trunc_eval(dc, x, K, N), N), N);
    }
    throw std::logic_error("newton_zero: no convergence (precondition violated)");
}

}  // namespace detail

/// The henselian zero above 0 of a polynomial with the hensel shape, as a
/// residue modulo uniformiser^N. Refining N extends the answer consistently.
template <class F>
TruncElem<typename F::Rep> hensel_lift(const FieldPoly<F>& f, const F& K, int N) {
    if (N < 1) throw std::invalid_argument("hensel_lift: precision must be >= 1");
    if (!has_hensel_shape_at_zero(f, K))
        throw std::invalid_argument("hensel_lift: polynomial is not residually split at 0");
    return {detail::newton_zero(f, K.zero(), K, N), N};
}

/// The special zero (the unique zero congruent to 1) of a special polynomial.
template <class F>
TruncElem<typename F::Rep> special_zero(const FieldPoly<F>& t, const F& K, int N) {
    if (N < 1) throw std::invalid_argument("special_zero: precision must be >= 1");
    if (!is_special(t, K))
        throw std::invalid_argument("special_zero: polynomial is not special");
    return {detail::newton_zero(t, K.one(), K, N), N};
}

/// Evaluate an exact polynomial over V at a truncated point.
template <class F>
typename F::Rep eval_at_trunc(const FieldPoly<F>& Q, const typename F::Rep& x, const F& K,
                              int N) {
    if (Q.is_zero()) return K.tzero(N);
    return detail::trunc_eval(detail::truncate_coeffs(Q, K, N), x, K, N);
}

}  // namespace hensel
