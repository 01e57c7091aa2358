#pragma once

#include "hensel/mpoly.hpp"
#include "hensel/ratfunc.hpp"
#include "hensel/value.hpp"

#include <optional>
#include <string>

namespace hensel {

// ---------------------------------------------------------------------------
// Univariate polynomial text, reusing the multivariate grammar with a single
// declared variable.
// ---------------------------------------------------------------------------

template <class C>
Poly<C> upoly_from_mpoly(const MPoly<C>& m) {
    if (m.nvars() != 1) throw std::logic_error("upoly_from_mpoly: arity != 1");
    if (m.is_zero()) return Poly<C>();
    std::vector<C> c(m.lead_mono().e[0] + 1, zero_like(m.lead_coeff()));
    for (const auto& [mono, v] : m.terms()) c[mono.e[0]] = v;
    return Poly<C>(std::move(c));
}

template <class C>
MPoly<C> mpoly_from_upoly(const Poly<C>& p) {
    MPoly<C> m(1);
    for (int i = 0; i <= p.degree(); ++i) {
        Mono mono{std::vector<unsigned>{static_cast<unsigned>(i)}};
        m.add_term(mono, p[i]);
    }
    return m;
}

template <class C>
Poly<C> parse_upoly(const std::string& text, const std::string& var, const C& one) {
    return upoly_from_mpoly(parse_mpoly(text, std::vector<std::string>{var}, one));
}

template <class C>
std::string upoly_str(const Poly<C>& p, const std::string& var) {
    return mpoly_str(mpoly_from_upoly(p), std::vector<std::string>{var});
}

// ---------------------------------------------------------------------------
// Coefficient-field contexts for the t-adic rational-function fields.
// ---------------------------------------------------------------------------

struct RatCoeffField {
    using Elem = Rat;
    Rat one() const { return Rat(1); }
    Rat from_int(long long v) const { return Rat(v); }
    std::string name() const { return "Q"; }
};

struct PrimeCoeffField {
    long long q;
    explicit PrimeCoeffField(long long q_) : q(q_) {
        if (!is_small_prime(q)) throw std::invalid_argument("PrimeCoeffField: q must be prime");
    }
    using Elem = Fp;
    Fp one() const { return Fp(1, q); }
    Fp from_int(long long v) const { return Fp(v, q); }
    std::string name() const { return "Fq(" + std::to_string(q) + ")"; }
};

/// Truncated-completion element: a canonical residue modulo uniformiser^prec.
/// The field context that made it is needed to operate on it.
template <class Rep>
struct TruncElem {
    Rep rep;
    int prec;
};

// ---------------------------------------------------------------------------
// Q with the p-adic valuation. Exact elements are rationals; truncated
// elements are integers in [0, p^N).
// ---------------------------------------------------------------------------

class PadicField {
public:
    using Elem = Rat;
    using Rep = Int;

    explicit PadicField(long long p) : p_(p) {
        if (!is_small_prime(p)) throw std::invalid_argument("PadicField: p must be prime");
    }

    long long prime() const { return p_; }

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    Elem uniformiser() const { return Rat(p_); }

    Value valuation(const Elem& a) const {
        if (a == 0) return Value::infinity();
        return Value(int_valuation(numerator(a), p_) - int_valuation(denominator(a), p_));
    }

    std::string elem_str(const Elem& a) const { return a.str(); }

    /// Residue modulo p^N of an element of the valuation ring. The reduced
    /// denominator of such an element is automatically coprime to p.
    Rep truncate(const Elem& a, int N) const {
        if (valuation(a) < Value(0))
            throw std::domain_error("truncate: element has negative valuation");
        const Int m = int_pow(Int(p_), static_cast<unsigned>(N));
        return mod_reduce(numerator(a) * mod_inverse(denominator(a), m), m);
    }

    Rep tzero(int) const { return Int(0); }
    Rep tone(int) const { return Int(1); }
    Rep tfrom_int(long long v, int N) const { return mod_reduce(Int(v), modulus(N)); }

    Rep tadd(const Rep& a, const Rep& b, int N) const { return mod_reduce(a + b, modulus(N)); }
    Rep tsub(const Rep& a, const Rep& b, int N) const { return mod_reduce(a - b, modulus(N)); }
    Rep tmul(const Rep& a, const Rep& b, int N) const { return mod_reduce(a * b, modulus(N)); }
    Rep tneg(const Rep& a, int N) const { return mod_reduce(-a, modulus(N)); }
    Rep tdiv(const Rep& a, const Rep& b, int N) const {
        if (!tis_unit(b)) throw std::domain_error("tdiv: divisor has positive valuation");
        return mod_reduce(a * mod_inverse(b, modulus(N)), modulus(N));
    }

    bool tis_zero(const Rep& a) const { return a == 0; }
    bool tis_unit(const Rep& a) const { return a % p_ != 0; }

    /// Exact valuation of the truncated representative when it is below the
    /// precision; nullopt means "indistinguishable from 0 at this precision".
    std::optional<long long> tvaluation(const Rep& a) const {
        if (a == 0) return std::nullopt;
        return int_valuation(a, p_);
    }

    /// Reduce a residue mod p^N to the coarser precision M <= N.
    Rep tlower(const Rep& a, int M) const { return mod_reduce(a, modulus(M)); }

    /// An exact field element congruent to the representative modulo m.
    Elem residue_lift(const Rep& a) const { return Rat(mod_reduce(a, Int(p_))); }

    /// The p-adic digit at pi^k, lifted to the base field.
    Elem pi_coefficient_lift(const Rep& a, int k) const {
        return Rat(mod_reduce(a / int_pow(Int(p_), static_cast<unsigned>(k)), Int(p_)));
    }

    std::string trunc_str(const Rep& a) const { return a.str(); }
    std::string modulus_str(int N) const { return modulus(N).str(); }

    Int modulus(int N) const {
        if (N < 1) throw std::invalid_argument("precision must be >= 1");
        return int_pow(Int(p_), static_cast<unsigned>(N));
    }

private:
    long long p_;
};

// ---------------------------------------------------------------------------
// Rational functions over CF (Q or F_q) with the t-adic valuation. Exact
// elements are reduced fractions of polynomials; truncated elements are
// polynomials of degree < N.
// ---------------------------------------------------------------------------

template <class CF>
class TadicField {
public:
    using C = typename CF::Elem;
    using Elem = RatFunc<C>;
    using Rep = Poly<C>;

    TadicField(CF coeffs, std::string var) : cf_(std::move(coeffs)), var_(std::move(var)) {}

    const CF& coeff_field() const { return cf_; }
    const std::string& var() const { return var_; }

    Elem zero() const { return Elem(Poly<C>(), one_poly()); }
    Elem one() const { return Elem(one_poly(), one_poly()); }
    Elem from_int(long long v) const {
        return Elem(Poly<C>::constant(cf_.from_int(v)), one_poly());
    }
    Elem uniformiser() const {
        return Elem(Poly<C>::monomial(cf_.one(), 1), one_poly());
    }

    Value valuation(const Elem& a) const {
        if (a.is_zero()) return Value::infinity();
        return Value(a.num().trailing_zero_count() - a.den().trailing_zero_count());
    }

    std::string elem_str(const Elem& a) const {
        std::string n = upoly_str(a.num(), var_);
        if (a.den().degree() == 0 && a.den().lead() == cf_.one()) return n;
        return "(" + n + ")/(" + upoly_str(a.den(), var_) + ")";
    }

    Rep truncate(const Elem& a, int N) const {
        if (valuation(a) < Value(0))
            throw std::domain_error("truncate: element has negative valuation");
        if (a.is_zero()) return Poly<C>();
        // Reduced fraction with v >= 0 forces ord(den) = 0.
        return tmul(chop(a.num(), N), series_inverse(a.den(), N), N);
    }

    Rep tzero(int) const { return Poly<C>(); }
    Rep tone(int) const { return one_poly(); }
    Rep tfrom_int(long long v, int) const { return Poly<C>::constant(cf_.from_int(v)); }

    Rep tadd(const Rep& a, const Rep& b, int N) const { return chop(a + b, N); }
    Rep tsub(const Rep& a, const Rep& b, int N) const { return chop(a - b, N); }
    Rep tmul(const Rep& a, const Rep& b, int N) const { return chop(a * b, N); }
    Rep tneg(const Rep& a, int N) const { return chop(-a, N); }
    Rep tdiv(const Rep& a, const Rep& b, int N) const {
        if (!tis_unit(b)) throw std::domain_error("tdiv: divisor has positive valuation");
        return tmul(a, series_inverse(b, N), N);
    }

    bool tis_zero(const Rep& a) const { return a.is_zero(); }
    bool tis_unit(const Rep& a) const {
        return !a.is_zero() && a.trailing_zero_count() == 0;
    }

    std::optional<long long> tvaluation(const Rep& a) const {
        if (a.is_zero()) return std::nullopt;
        return a.trailing_zero_count();
    }

    Rep tlower(const Rep& a, int M) const { return chop(a, M); }

    Elem residue_lift(const Rep& a) const {
        if (a.is_zero() || a.trailing_zero_count() > 0) return zero();
        return Elem(Poly<C>::constant(a[0]), one_poly());
    }

    /// The series coefficient at t^k, lifted to the base field.
    Elem pi_coefficient_lift(const Rep& a, int k) const {
        const C c = a.coeff_or(k, zero_like(cf_.one()));
        if (is_zero_elem(c)) return zero();
        return Elem(Poly<C>::constant(c), one_poly());
    }

    std::string trunc_str(const Rep& a) const { return upoly_str(a, var_); }
    std::string modulus_str(int N) const {
        return N == 1 ? var_ : var_ + "^" + std::to_string(N);
    }

    Elem parse_elem(const std::string& num, const std::string& den) const {
        Poly<C> n = parse_upoly(num, var_, cf_.one());
        Poly<C> d = parse_upoly(den, var_, cf_.one());
        return Elem(std::move(n), std::move(d));
    }

private:
    Poly<C> one_poly() const { return Poly<C>::constant(cf_.one()); }

    static Poly<C> chop(const Poly<C>& a, int N) {
        if (a.degree() < N) return a;
        std::vector<C> c(a.coeffs().begin(), a.coeffs().begin() + N);
        return Poly<C>(std::move(c));
    }

    /// Power-series inverse of a unit, modulo t^N.
    Poly<C> series_inverse(const Poly<C>& d, int N) const {
        if (!tis_unit(d)) throw std::domain_error("series_inverse: not a unit");
        const C d0inv = cf_.one() / d[0];
        std::vector<C> inv;
        inv.reserve(static_cast<size_t>(N));
        inv.push_back(d0inv);
        const C zero = zero_like(cf_.one());
        for (int k = 1; k < N; ++k) {
            C acc = zero;
            for (int i = 1; i <= k && i <= d.degree(); ++i)
                acc = acc + d[i] * inv[static_cast<size_t>(k - i)];
            inv.push_back(zero - acc * d0inv);
        }
        return Poly<C>(std::move(inv));
    }

    CF cf_;
    std::string var_;
};

/// Integer powers of exact field elements, negative exponents included.
template <class F>
typename F::Elem elem_pow(const F& K, const typename F::Elem& base, long long e) {
    if (e >= 0) return ring_pow(base, static_cast<unsigned long long>(e), K.one());
    if (is_zero_elem(base)) throw std::domain_error("elem_pow: negative power of zero");
    return K.one() / ring_pow(base, static_cast<unsigned long long>(-e), K.one());
}

/// Parse/print hooks uniform across the two field kinds, so generic code can
/// read exact elements from the wire format.
inline Rat parse_rat_parts(const std::string& num, const std::string& den) {
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("FieldElement: zero denominator");
    return Rat(n) / Rat(d);  // division normalises the sign; the 2-arg ctor would not
}

}  // namespace hensel
