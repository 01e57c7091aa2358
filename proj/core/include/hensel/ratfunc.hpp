#pragma once

#include "hensel/poly.hpp"

namespace hensel {

/// Reduced fraction of univariate polynomials over a coefficient field C.
/// Canonical form: gcd(num, den) = 1 and den monic, so equality is syntactic.
/// A nonzero denominator is always present and supplies the coefficient-field
/// exemplar for the generic scalar hooks.
template <class C>
class RatFunc {
public:
    RatFunc(Poly<C> num, Poly<C> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc from_poly(Poly<C> p) {
        if (p.is_zero()) throw std::invalid_argument("RatFunc::from_poly: use an exemplar for zero");
        Poly<C> one = Poly<C>::constant(one_like(p.lead()));
        return RatFunc(std::move(p), std::move(one));
    }

    static RatFunc constant(C v, const C& exemplar) {
        Poly<C> one = Poly<C>::constant(one_like(exemplar));
        return RatFunc(Poly<C>::constant(std::move(v)), std::move(one));
    }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Exemplar coefficient; the denominator is never empty.
    const C& scalar_exemplar() const { return den_.lead(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<C>::constant(one_like(den_.lead()));
            return;
        }
        Poly<C> g = gcd_poly(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod_field(num_, g).first;
            den_ = divmod_field(den_, g).first;
        }
        const C inv = one_like(den_.lead()) / den_.lead();
        num_ = inv * num_;
        den_ = inv * den_;
    }

    Poly<C> num_;
    Poly<C> den_;
};

template <class C>
bool is_zero_elem(const RatFunc<C>& x) {
    return x.is_zero();
}
template <class C>
RatFunc<C> zero_like(const RatFunc<C>& x) {
    return RatFunc<C>(Poly<C>(), Poly<C>::constant(one_like(x.scalar_exemplar())));
}
template <class C>
RatFunc<C> one_like(const RatFunc<C>& x) {
    Poly<C> one = Poly<C>::constant(one_like(x.scalar_exemplar()));
    return RatFunc<C>(one, one);
}
template <class C>
RatFunc<C> from_int_like(const RatFunc<C>& x, long long v) {
    const C& ex = x.scalar_exemplar();
    return RatFunc<C>(Poly<C>::constant(from_int_like(ex, v)),
                      Poly<C>::constant(one_like(ex)));
}

}  // namespace hensel
