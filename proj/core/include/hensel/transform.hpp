#pragma once

#include "hensel/lifting.hpp"

#include <optional>

namespace hensel {

/// Recentre an isolated slope: from the formal identity
///   b_k^{k+1} h(Y) = b_{k+1}^k g(-b_k Y / b_{k+1})
/// the coefficients are h_i = (-1)^i b_i b_k^{i-k-1} b_{k+1}^{k-i}. Division
/// happens in K but the isolated-slope conditions push every h_i into V,
/// with h_k = ±1 and h_{k+1} = ∓1, so h has a henselian zero above 1.
template <class F>
FieldPoly<F> segment_to_h(const FieldPoly<F>& g, int k, const F& K) {
    const NewtonPolygon P = NewtonPolygon::of_polynomial(g, K);
    if (!P.is_isolated(k))
        throw std::invalid_argument("segment_to_h: index is not an isolated slope");
    const auto zero = K.zero();
    const auto bk = g.coeff_or(k, zero);
    const auto bk1 = g.coeff_or(k + 1, zero);
    std::vector<typename F::Elem> h;
    h.reserve(static_cast<size_t>(g.degree() + 1));
    for (int i = 0; i <= g.degree(); ++i) {
        auto hi = g[i] * elem_pow(K, bk, i - k - 1) * elem_pow(K, bk1, k - i);
        if (i & 1) hi = zero - hi;
        if (K.valuation(hi) < Value(0))
            throw std::logic_error("segment_to_h: coefficient escaped the valuation ring");
        h.push_back(std::move(hi));
    }
    FieldPoly<F> hp(std::move(h));
    if (!(K.valuation(hp.eval(K.one())) > Value(0)) ||
        K.valuation(hp.derivative().eval(K.one())) != Value(0))
        throw std::logic_error("segment_to_h: recentred polynomial is not split at 1");
    return hp;
}

/// Shift the zero above 1 to a zero above 0: f(X) = h(1+X). The result has
/// v(a_0) > 0 and v(a_1) = 0 but is generally not monic.
template <class F>
FieldPoly<F> h_to_nagata(const FieldPoly<F>& h, const F& K) {
    FieldPoly<F> f = h.shifted(K.one());
    if (!has_hensel_shape_at_zero(f, K))
        throw std::logic_error("h_to_nagata: shifted polynomial lost the hensel shape");
    return f;
}

/// Invert the zero into special position via a_0 t(X) = X^n f(-a_0/(a_1 X)):
/// t_{n-i} = (-1)^i a_i a_0^{i-1} a_1^{-i}, monic with -X^{n-1}. When a_0 = 0
/// the zero of f is exactly 0 and no special polynomial exists: that is the
/// distinguished trivial outcome, not an error.
template <class F>
struct SpecialOutcome {
    bool trivial_zero;
    FieldPoly<F> t;  // meaningful iff !trivial_zero
};

template <class F>
SpecialOutcome<F> nagata_to_special(const FieldPoly<F>& f, const F& K) {
    const auto zero = K.zero();
    const auto a0 = f.coeff_or(0, zero);
    const auto a1 = f.coeff_or(1, zero);
    if (!(K.valuation(a0) > Value(0)) || K.valuation(a1) != Value(0))
        throw std::invalid_argument("nagata_to_special: input is not split at 0");
    if (is_zero_elem(a0)) return {true, FieldPoly<F>()};
    const int n = f.degree();
    std::vector<typename F::Elem> t(static_cast<size_t>(n + 1), zero);
    for (int i = 0; i <= n; ++i) {
        auto ti = f[i] * elem_pow(K, a0, i - 1) * elem_pow(K, a1, -i);
        if (i & 1) ti = zero - ti;
        t[static_cast<size_t>(n - i)] = std::move(ti);
    }
    FieldPoly<F> tp(std::move(t));
    if (!is_special(tp, K))
        throw std::logic_error("nagata_to_special: inversion did not produce a special polynomial");
    return {false, std::move(tp)};
}

/// alpha = (a*beta + b)/(c*beta + d) over the special zero beta. All four
/// entries lie in V (arranged by the scaling factor lambda = pi^max(0,-v(c0)))
/// and ad - bc != 0 exactly; c*beta + d has the finite valuation v(c), so it
/// is certified nonzero by the valuation of c alone.
template <class F>
struct MoebiusDescription {
    typename F::Elem a, b, c, d;
};

/// The full chain for the isolated slope at k.
template <class F>
struct SlopeChain {
    int k;
    Rat slope;
    Value root_value;        // v(b_k) - v(b_{k+1})
    typename F::Elem c0;     // -b_k/b_{k+1}; the root is c0*(1 + mu)
    FieldPoly<F> h;          // zero above 1
    FieldPoly<F> f;          // h(1+X), zero above 0
    bool trivial_zero;       // a_0 = 0: mu = 0 and the root is exactly c0
    FieldPoly<F> t;          // special polynomial (iff !trivial_zero)
    std::optional<MoebiusDescription<F>> moebius;  // engaged iff !trivial_zero
};

template <class F>
SlopeChain<F> transform_chain(const FieldPoly<F>& g, int k, const F& K) {
    const NewtonPolygon P = NewtonPolygon::of_polynomial(g, K);
    if (!P.is_isolated(k))
        throw std::invalid_argument("transform_chain: index is not an isolated slope");

    Rat slope = 0;
    for (const PolygonSegment& s : P.segments())
        if (s.start_index == k) slope = s.slope;

    const auto zero = K.zero();
    auto c0 = zero - g[k] / g[k + 1];
    FieldPoly<F> h = segment_to_h(g, k, K);
    FieldPoly<F> f = h_to_nagata(h, K);

    SpecialOutcome<F> sp = nagata_to_special(f, K);
    std::optional<MoebiusDescription<F>> moebius;
    if (!sp.trivial_zero) {
        const auto a0 = f.coeff_or(0, zero);
        const auto a1 = f.coeff_or(1, zero);
        const Value vc0 = K.valuation(c0);
        const long long scale = vc0 < Value(0) ? -vc0.amount() : 0;
        const auto lambda = elem_pow(K, K.uniformiser(), scale);
        moebius = MoebiusDescription<F>{lambda * c0 * a1, zero - lambda * c0 * a0,
                                        lambda * a1, zero};
        if (is_zero_elem(moebius->a * moebius->d - moebius->b * moebius->c))
            throw std::logic_error("transform_chain: degenerate Moebius data");
    }
    return SlopeChain<F>{k,
                         std::move(slope),
                         P.root_valuation(k),
                         std::move(c0),
                         std::move(h),
                         std::move(f),
                         sp.trivial_zero,
                         std::move(sp.t),
                         std::move(moebius)};
}

/// mu at precision N: the henselian zero of the chain's f (0 when trivial).
template <class F>
TruncElem<typename F::Rep> chain_mu(const SlopeChain<F>& ch, const F& K, int N) {
    if (ch.trivial_zero) return {K.tzero(N), N};
    return hensel_lift(ch.f, K, N);
}

}  // namespace hensel
