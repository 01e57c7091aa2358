#pragma once

#include "hensel/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hensel {

/// Dense univariate polynomial over a commutative coefficient ring K.
///
/// Invariant: the stored coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector and degree() is -1 for it. Operations that
/// must manufacture constants derive them from an exemplar coefficient (see
/// scalar.hpp), never from a default constructor.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(K v) {
        std::vector<K> c;
        if (!is_zero_elem(v)) c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    static Poly monomial(K v, int deg) {
        if (is_zero_elem(v)) return Poly();
        std::vector<K> c;
        c.reserve(deg + 1);
        for (int i = 0; i < deg; ++i) c.push_back(zero_like(v));
        c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const K& lead() const {
        if (c_.empty()) throw std::logic_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }

    K coeff_or(int i, const K& zero) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Poly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const Poly& hi = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<K> c = hi.c_;
        for (size_t i = 0; i < lo.c_.size(); ++i) c[i] = c[i] + lo.c_[i];
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const K& x : c_) c.push_back(zero_like(x) - x);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        const K z = zero_like(a.c_.front());
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, z);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_elem(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& a) {
        if (is_zero_elem(s)) return Poly();
        std::vector<K> c;
        c.reserve(a.c_.size());
        for (const K& x : a.c_) c.push_back(s * x);
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Horner evaluation; the result lives in the coefficient ring.
    K eval(const K& x) const {
        if (c_.empty()) return zero_like(x);
        K r = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c;
        c.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            c.push_back(is_zero_elem(c_[i])
                            ? zero_like(c_[i])
                            : from_int_like(c_[i], static_cast<long long>(i)) * c_[i]);
        return Poly(std::move(c));
    }

    /// Substitution X -> X + shift (Taylor shift), by Horner over K[X].
    Poly shifted(const K& shift) const {
        if (c_.empty()) return Poly();
        Poly x_plus(std::vector<K>{shift, one_like(shift)});
        Poly r = Poly::constant(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;)
            r = r * x_plus + Poly::constant(c_[i]);
        return r;
    }

    /// Largest k with X^k dividing the polynomial (0 for the zero polynomial).
    int trailing_zero_count() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!is_zero_elem(c_[i])) return static_cast<int>(i);
        return 0;
    }

    Poly shift_down(int k) const {  // divide by X^k; lower coefficients must vanish
        if (k == 0) return *this;
        std::vector<K> c(c_.begin() + k, c_.end());
        return Poly(std::move(c));
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }

private:
    void trim() {
        while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
bool is_zero_elem(const Poly<K>& p) {
    return p.is_zero();
}
template <class K>
Poly<K> zero_like(const Poly<K>&) {
    return Poly<K>();
}
template <class K>
Poly<K> one_like(const Poly<K>& p) {
    if (p.is_zero()) throw std::logic_error("one_like(Poly): no coefficient exemplar");
    return Poly<K>::constant(one_like(p.lead()));
}
template <class K>
Poly<K> from_int_like(const Poly<K>& p, long long v) {
    if (p.is_zero()) {
        if (v == 0) return Poly<K>();
        throw std::logic_error("from_int_like(Poly): no coefficient exemplar");
    }
    return Poly<K>::constant(from_int_like(p.lead(), v));
}

/// Division with remainder by a monic divisor; valid over any commutative ring.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod_monic(const Poly<K>& a, const Poly<K>& f) {
    if (!f.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
    const int n = f.degree();
    if (a.degree() < n) return {Poly<K>(), a};
    const K zero = zero_like(f.lead());
    std::vector<K> rem = a.coeffs();
    std::vector<K> quot(a.degree() - n + 1, zero);
    for (int d = a.degree(); d >= n; --d) {
        K c = rem[static_cast<size_t>(d)];
        if (is_zero_elem(c)) continue;
        quot[static_cast<size_t>(d - n)] = c;
        for (int i = 0; i <= n; ++i)
            rem[static_cast<size_t>(d - n + i)] =
                rem[static_cast<size_t>(d - n + i)] - c * f.coeff_or(i, zero);
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

/// Division with remainder over a field (divisor nonzero).
template <class K>
std::pair<Poly<K>, Poly<K>> divmod_field(const Poly<K>& a, const Poly<K>& g) {
    if (g.is_zero()) throw std::invalid_argument("divmod_field: division by zero");
    const K inv_lead = one_like(g.lead()) / g.lead();
    const int n = g.degree();
    if (a.degree() < n) return {Poly<K>(), a};
    const K zero = zero_like(g.lead());
    std::vector<K> rem = a.coeffs();
    std::vector<K> quot(a.degree() - n + 1, zero);
    for (int d = a.degree(); d >= n; --d) {
        K c = rem[static_cast<size_t>(d)] * inv_lead;
        if (is_zero_elem(c)) continue;
        quot[static_cast<size_t>(d - n)] = c;
        for (int i = 0; i <= n; ++i)
            rem[static_cast<size_t>(d - n + i)] =
                rem[static_cast<size_t>(d - n + i)] - c * g.coeff_or(i, zero);
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> make_monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return (one_like(a.lead()) / a.lead()) * a;
}

/// Monic gcd over a field.
template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = divmod_field(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return make_monic(a);
}

namespace detail {

/// Divide out the integer content (gcd of coefficients), keeping the sign of
/// the leading coefficient positive.
inline Poly<Int> int_primitive(Poly<Int> a) {
    if (a.is_zero()) return a;
    Int content = 0;
    for (const Int& c : a.coeffs()) content = gcd(content, c);
    if (a.lead() < 0) content = -content;
    std::vector<Int> out;
    out.reserve(a.coeffs().size());
    for (const Int& c : a.coeffs()) out.push_back(c / content);
    return Poly<Int>(std::move(out));
}

/// Clear rational denominators and strip the content.
inline Poly<Int> rat_primitive(const Poly<Rat>& a) {
    Int den = 1;
    for (const Rat& c : a.coeffs()) den = lcm(den, denominator(c));
    std::vector<Int> out;
    out.reserve(a.coeffs().size());
    for (const Rat& c : a.coeffs()) out.push_back(numerator(c) * (den / denominator(c)));
    return int_primitive(Poly<Int>(std::move(out)));
}

/// Pseudo-remainder: the remainder of lc(g)^k * f by g, computed without
/// leaving the integers. The exact scaling power is irrelevant because the
/// caller strips the content anyway.
inline Poly<Int> int_pseudo_rem(Poly<Int> r, const Poly<Int>& g) {
    const Int lg = g.lead();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const Poly<Int> cancel = Poly<Int>::monomial(r.lead(), r.degree() - g.degree()) * g;
        r = lg * r - cancel;
    }
    return r;
}

}  // namespace detail

/// Monic gcd over Q, via a primitive remainder sequence over Z. Equivalent to
/// the generic field algorithm but immune to the rational-coefficient blowup
/// of naive monic division.
inline Poly<Rat> gcd_poly(const Poly<Rat>& a, const Poly<Rat>& b) {
    Poly<Int> f = detail::rat_primitive(a);
    Poly<Int> g = detail::rat_primitive(b);
    if (f.is_zero()) std::swap(f, g);
    while (!g.is_zero()) {
        if (f.degree() < g.degree()) std::swap(f, g);
        Poly<Int> r = detail::int_pseudo_rem(std::move(f), g);
        f = std::move(g);
        g = detail::int_primitive(std::move(r));
    }
    if (f.is_zero()) return {};
    std::vector<Rat> c;
    c.reserve(f.coeffs().size());
    for (const Int& x : f.coeffs()) c.push_back(Rat(x) / Rat(f.lead()));
    return Poly<Rat>(std::move(c));
}

/// Resultant over a field, by the Euclidean remainder sequence.
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero()) throw std::invalid_argument("resultant: first argument is zero");
    const K one = one_like(f.lead());
    if (g.is_zero()) return f.degree() == 0 ? one : zero_like(one);
    if (f.degree() == 0) {
        K r = one;
        for (int i = 0; i < g.degree(); ++i) r = r * f.lead();
        return r;
    }
    if (g.degree() == 0) {
        K r = one;
        for (int i = 0; i < f.degree(); ++i) r = r * g.lead();
        return r;
    }
    auto pow_k = [&](K base, int e) {
        K r = one;
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    // Res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) Res(g, f mod g)
    K acc = one;
    Poly<K> a = f, b = g;
    bool negate = false;
    while (true) {
        const int da = a.degree(), db = b.degree();
        Poly<K> r = divmod_field(a, b).second;
        if ((da & 1) && (db & 1)) negate = !negate;
        if (r.is_zero()) return zero_like(one);  // common factor

        acc = acc * pow_k(b.lead(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
        if (b.degree() == 0) {
            acc = acc * pow_k(b.lead(), a.degree());
            break;
        }
    }
    return negate ? zero_like(one) - acc : acc;
}

}  // namespace hensel
