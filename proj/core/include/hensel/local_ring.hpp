#pragma once

#include "hensel/groebner.hpp"
#include "hensel/poly.hpp"

#include <optional>

namespace hensel {

/// Finitely presented local ring k[x_1..x_m]/I localised at (x_1..x_m), with
/// k = Q or F_q. Residual discreteness is enforced structurally: every ideal
/// generator must have zero constant term, so the residue map "evaluate at 0"
/// descends to the quotient and units are exactly the elements with nonzero
/// residue. Element equality goes through normal forms against the reduced
/// Groebner basis of I.
template <class C>
class FPLocalRing {
public:
    FPLocalRing(std::vector<std::string> vars, const std::vector<std::string>& ideal_text,
                C one)
        : vars_(std::move(vars)), one_(std::move(one)) {
        std::vector<MPoly<C>> gens;
        gens.reserve(ideal_text.size());
        for (const std::string& s : ideal_text) gens.push_back(parse(s));
        init(std::move(gens));
    }

    FPLocalRing(std::vector<std::string> vars, std::vector<MPoly<C>> ideal_gens, C one)
        : vars_(std::move(vars)), one_(std::move(one)) {
        init(std::move(ideal_gens));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const C& coeff_one() const { return one_; }
    const std::vector<MPoly<C>>& ideal_gens() const { return gb_.original; }
    const GroebnerBasis<C>& gb() const { return gb_; }

    MPoly<C> parse(const std::string& text) const { return parse_mpoly(text, vars_, one_); }
    std::string str(const MPoly<C>& p) const { return mpoly_str(p, vars_); }

    MPoly<C> zero() const { return MPoly<C>(vars_.size()); }
    MPoly<C> one() const { return MPoly<C>::constant(vars_.size(), one_); }
    MPoly<C> variable(size_t i) const { return MPoly<C>::variable(vars_.size(), i, one_); }

    MPoly<C> nf(const MPoly<C>& p) const { return normal_form(p, gb_); }

    bool is_zero(const MPoly<C>& p) const { return nf(p).is_zero(); }
    bool equal(const MPoly<C>& a, const MPoly<C>& b) const { return nf(a - b).is_zero(); }

    /// Image under the residue map R -> k (all variables to 0); well defined
    /// on any representative because the ideal generators vanish at 0.
    C residue(const MPoly<C>& p) const {
        if (p.is_zero()) return zero_like(one_);
        const auto& last = *p.terms().rbegin();
        if (last.first.total_degree() == 0) return last.second;
        return zero_like(one_);
    }

    bool is_unit(const MPoly<C>& p) const { return !is_zero_elem(residue(p)); }

    /// Least N <= maxN with nf(p^N) = 0, if any.
    std::optional<long long> nilpotency_exponent(const MPoly<C>& p, long long maxN) const {
        MPoly<C> pw = one();
        for (long long n = 1; n <= maxN; ++n) {
            pw = nf(pw * p);
            if (pw.is_zero()) return n;
        }
        return std::nullopt;
    }

private:
    void init(std::vector<MPoly<C>> gens) {
        for (const MPoly<C>& g : gens)
            if (!is_zero_elem(residue_raw(g)))
                throw std::invalid_argument(
                    "FPLocalRing: ideal generator with nonzero constant term (residue field "
                    "would collapse)");
        gb_ = buchberger(std::move(gens), vars_.size());
    }

    C residue_raw(const MPoly<C>& p) const {
        if (p.is_zero()) return zero_like(one_);
        const auto& last = *p.terms().rbegin();
        return last.first.total_degree() == 0 ? last.second : zero_like(one_);
    }

    std::vector<std::string> vars_;
    C one_;
    GroebnerBasis<C> gb_;
};

/// Element of the localisation of the presented ring at its maximal ideal:
/// a fraction num/den whose denominator has nonzero residue. For the shipped
/// presentations every such denominator is a non-zero-divisor, so equality by
/// cross-multiplication of normal forms is exact (see decisions ledger).
template <class C>
struct RingElem {
    MPoly<C> num;
    MPoly<C> den;
};

template <class C>
RingElem<C> make_elem(const FPLocalRing<C>& R, MPoly<C> num) {
    return RingElem<C>{R.nf(std::move(num)), R.one()};
}

template <class C>
RingElem<C> make_elem(const FPLocalRing<C>& R, MPoly<C> num, MPoly<C> den) {
    if (!R.is_unit(den)) throw std::invalid_argument("RingElem: denominator is not a unit");
    return RingElem<C>{R.nf(std::move(num)), R.nf(std::move(den))};
}

template <class C>
RingElem<C> elem_add(const FPLocalRing<C>& R, const RingElem<C>& a, const RingElem<C>& b) {
    return RingElem<C>{R.nf(a.num * b.den + b.num * a.den), R.nf(a.den * b.den)};
}
template <class C>
RingElem<C> elem_sub(const FPLocalRing<C>& R, const RingElem<C>& a, const RingElem<C>& b) {
    return RingElem<C>{R.nf(a.num * b.den - b.num * a.den), R.nf(a.den * b.den)};
}
template <class C>
RingElem<C> elem_mul(const FPLocalRing<C>& R, const RingElem<C>& a, const RingElem<C>& b) {
    return RingElem<C>{R.nf(a.num * b.num), R.nf(a.den * b.den)};
}
template <class C>
bool elem_equal(const FPLocalRing<C>& R, const RingElem<C>& a, const RingElem<C>& b) {
    return R.is_zero(a.num * b.den - b.num * a.den);
}
template <class C>
bool elem_is_zero(const FPLocalRing<C>& R, const RingElem<C>& a) {
    return R.is_zero(a.num);
}
template <class C>
bool elem_is_unit(const FPLocalRing<C>& R, const RingElem<C>& a) {
    return R.is_unit(a.num);
}

/// normal_form on localisation elements: canonicalise both parts; report the
/// canonical numerator-over-denominator pair.
template <class C>
RingElem<C> elem_normal_form(const FPLocalRing<C>& R, const RingElem<C>& a) {
    if (!R.is_unit(a.den)) throw std::invalid_argument("RingElem: denominator is not a unit");
    return RingElem<C>{R.nf(a.num), R.nf(a.den)};
}

/// Least N <= maxN with (num/den)^N = 0; the unit denominator never vanishes,
/// so only the numerator matters.
template <class C>
std::optional<long long> elem_nilpotency(const FPLocalRing<C>& R, const RingElem<C>& a,
                                         long long maxN) {
    return R.nilpotency_exponent(a.num, maxN);
}

// ---------------------------------------------------------------------------
// The one-variable extension R[x] = R[X]/<f> for a Nagata polynomial f over
// R, together with the monoid S = { g(x) : g(0) a unit } at which the
// henselisation step R_f localises. f monic makes R[x] a free R-module on 1, x, ..,
// x^{n-1}, so elements are degree-< n polynomials with normal-form
// coefficients and no Groebner computation in x is ever needed.
// ---------------------------------------------------------------------------

template <class C>
using RPoly = Poly<MPoly<C>>;  // polynomial over the presented ring

template <class C>
RPoly<C> nf_poly(const FPLocalRing<C>& R, const RPoly<C>& p) {
    std::vector<MPoly<C>> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (const MPoly<C>& x : p.coeffs()) c.push_back(R.nf(x));
    return RPoly<C>(std::move(c));
}

/// True iff f is a Nagata polynomial over R: monic, residue(a_1) a unit,
/// residue(a_0) zero.
template <class C>
bool is_nagata_over_ring(const FPLocalRing<C>& R, const RPoly<C>& f) {
    if (f.degree() < 1 || !f.is_monic()) return false;
    const MPoly<C> zero = R.zero();
    if (!R.is_unit(f.coeff_or(1, zero))) return false;
    return !R.is_unit(f.coeff_or(0, zero));
}

template <class C>
struct RfPresentation {
    FPLocalRing<C> base;
    RPoly<C> f;  // monic, coefficients in normal form

    int degree() const { return f.degree(); }

    /// Canonical representative in the free module basis 1, x, .., x^{n-1}.
    RPoly<C> nf(const RPoly<C>& p) const {
        return nf_poly(base, divmod_monic(p, f).second);
    }

    RPoly<C> mul(const RPoly<C>& a, const RPoly<C>& b) const { return nf(a * b); }

    bool is_zero(const RPoly<C>& p) const { return nf(p).is_zero(); }

    std::optional<long long> nilpotency_exponent(const RPoly<C>& p, long long maxN) const {
        RPoly<C> pw = RPoly<C>::constant(base.one());
        for (long long n = 1; n <= maxN; ++n) {
            pw = mul(pw, p);
            if (pw.is_zero()) return n;
        }
        return std::nullopt;
    }
};

template <class C>
RfPresentation<C> build_Rf(const FPLocalRing<C>& R, const RPoly<C>& f) {
    RPoly<C> fn = nf_poly(R, f);
    if (!is_nagata_over_ring(R, fn))
        throw std::invalid_argument("build_Rf: polynomial is not Nagata over the base ring");
    return RfPresentation<C>{R, std::move(fn)};
}

/// Membership in the monoid S: the constant term has a unit residue.
template <class C>
bool in_S(const FPLocalRing<C>& R, const RPoly<C>& g) {
    return R.is_unit(g.coeff_or(0, R.zero()));
}

}  // namespace hensel
