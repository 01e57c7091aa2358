#pragma once

#include "hensel/charpoly.hpp"
#include "hensel/square.hpp"

#include <optional>
#include <string>

namespace hensel {

/// Factor the largest power of T out of a nonzero polynomial: g = T^k · h
/// with h(0) ≠ 0.
template <class K>
std::pair<int, Poly<K>> split_power(const Poly<K>& g) {
    if (g.is_zero()) throw std::invalid_argument("split_power: zero polynomial");
    int k = 0;
    while (is_zero_elem(g.coeffs()[static_cast<size_t>(k)])) ++k;
    std::vector<K> c(g.coeffs().begin() + k, g.coeffs().end());
    return {k, Poly<K>(std::move(c))};
}

/// The nilpotency half of a kernel decision: ζ maps to a nonzero element of
/// the extension while (ζ·γ)^exponent normal-forms to zero. zeta_gamma keeps
/// the product so replays can cross-check it against ζ and the decided q.
template <class C>
struct NilpotentCertificate {
    MPoly<C> b;            // product of per-generator witnesses, outside p
    RPoly<C> zeta;         // ζ = b·h(γ), reduced
    long long exponent;    // least verified M with (ζγ)^M = 0
    long long a_exponent;  // N with (b·a(T))^N coefficientwise zero
    RPoly<C> zeta_gamma;   // ζ·γ, reduced
};

template <class C, class F>
struct KernelDecision {
    std::string branch;  // "g1(0) != 0" | "h1(delta) = 0" | "delta = 0"
    RPoly<C> q;          // the element decided, reduced into R_f
    Poly<MPoly<C>> g;    // characteristic polynomial of γ over R
    FieldPoly<F> g1;     // its image over K
    int k;               // power of T split off g1 (0 in the first branch)
    bool in_Sf;
    std::optional<ValueReading> delta;                // engaged iff in_Sf
    std::optional<NilpotentCertificate<C>> witness;   // engaged iff !in_Sf
};

namespace detail {

template <class C>
Poly<MPoly<C>> nf_coeffs(const FPLocalRing<C>& R, const Poly<MPoly<C>>& p) {
    std::vector<MPoly<C>> c;
    c.reserve(p.coeffs().size());
    for (const MPoly<C>& x : p.coeffs()) c.push_back(R.nf(x));
    return Poly<MPoly<C>>(std::move(c));
}

/// Evaluate a polynomial over R at an element of R_f (Horner, reducing as we
/// go).
template <class C>
RPoly<C> eval_in_Rf(const Poly<MPoly<C>>& h, const RPoly<C>& gamma,
                    const RfPresentation<C>& Rf) {
    RPoly<C> acc;
    for (int i = h.degree(); i >= 0; --i) {
        acc = Rf.mul(acc, gamma);
        acc = Rf.nf(acc + RPoly<C>::constant(h.coeffs()[static_cast<size_t>(i)]));
    }
    return acc;
}

}  // namespace detail

/// Decide whether the class γ of q in R_f lies in S_f: compute the
/// characteristic polynomial of γ, branch on its image over K, and emit
/// either a certified nonzero value for θ_f(γ) or a nilpotency witness
/// (ζ, M) with θ_f(ζ) ≠ 0 and (ζγ)^M = 0.
template <class C, class F>
KernelDecision<C, F> kernel_decide(const RPoly<C>& q_in, CommutingSquare<C, F>& sq) {
    const FPLocalRing<C>& R = sq.ring();
    const RfPresentation<C>& Rf = sq.Rf();
    const MinimalValuationSetup<C, F>& S = sq.setup();

    const RPoly<C> q = Rf.nf(q_in);

    // (a) characteristic polynomial of multiplication by γ on the free
    // R-module R_f, then its image over K.
    const Poly<MPoly<C>> g = detail::nf_coeffs(R, char_poly(q, Rf.f, R.one()));
    const FieldPoly<F> g1 = S.theta_poly(g);
    const FieldPoly<F> q1 = S.theta_poly(q);

    // (b) nonzero constant term forces δ ≠ 0 outright.
    if (!is_zero_elem(g1.coeff_or(0, sq.field().zero()))) {
        ValueReading vr = sq.extension().value_of(q1);
        if (!vr.value.is_finite())
            throw std::logic_error("kernel_decide: constant term nonzero but image vanished");
        return {"g1(0) != 0", q,    g,
                g1,           0,    true,
                std::move(vr), std::nullopt};
    }

    // (c) split g1 = T^k h1 and lift the split back to R: g = T^k h + a(T).
    const auto [k, h1] = split_power(g1);
    std::vector<MPoly<C>> hc(g.coeffs().begin() + k, g.coeffs().end());
    const Poly<MPoly<C>> h(std::move(hc));
    std::vector<MPoly<C>> ac(g.coeffs().begin(), g.coeffs().begin() + k);
    const Poly<MPoly<C>> a(std::move(ac));

    // (d) decide δ = θ_f(γ) against the extension.
    if (!sq.extension().is_zero(q1)) {
        // δ ≠ 0 together with g1(δ) = 0 forces h1(δ) = 0, and γ ∈ S_f.
        ValueReading vr = sq.extension().value_of(q1);
        return {"h1(delta) = 0", q,    g,
                g1,              k,    true,
                std::move(vr),   std::nullopt};
    }

    // (e) δ = 0: assemble the witness. Every low coefficient of g lies in p;
    // combine their stored witnesses into one b and one exponent.
    MPoly<C> b = R.one();
    long long bound = 1;
    for (const MPoly<C>& aj : a.coeffs()) {
        if (aj.is_zero()) continue;
        const auto [bj, Nj] = minimality_witness(aj, S);
        b = R.nf(b * bj);
        bound += Nj - 1;
    }

    const Poly<MPoly<C>> ba =
        detail::nf_coeffs(R, a * Poly<MPoly<C>>::constant(b));
    long long N = -1;
    Poly<MPoly<C>> pw = Poly<MPoly<C>>::constant(R.one());
    for (long long n = 1; n <= bound; ++n) {
        pw = detail::nf_coeffs(R, pw * ba);
        if (pw.is_zero()) {
            N = n;
            break;
        }
    }
    if (N < 0) throw std::logic_error("kernel_decide: witness exponent bound exceeded");

    const RPoly<C> eps = detail::eval_in_Rf(h, q, Rf);
    const RPoly<C> zeta = Rf.nf(eps * RPoly<C>::constant(b));
    if (sq.extension().is_zero(S.theta_poly(zeta)))
        throw std::logic_error("kernel_decide: witness zeta maps to zero");

    // (ζγ)^{kN} = (b γ^k ε)^N (bε)^{(k-1)N} = (−b a(γ))^N (bε)^{(k-1)N} = 0,
    // so a bounded search upward from N must land on an exponent.
    const RPoly<C> zg = Rf.mul(zeta, q);
    RPoly<C> zp = RPoly<C>::constant(R.one());
    for (long long n = 1; n < N; ++n) zp = Rf.mul(zp, zg);
    long long M = -1;
    for (long long n = N; n <= static_cast<long long>(k) * N; ++n) {
        zp = Rf.mul(zp, zg);
        if (zp.is_zero()) {
            M = n;
            break;
        }
    }
    if (M < 0) throw std::logic_error("kernel_decide: zeta*gamma power bound exceeded");

    NilpotentCertificate<C> cert{std::move(b), zeta, M, N, zg};
    return {"delta = 0",    q,     g,
            g1,             k,     false,
            std::nullopt,   std::move(cert)};
}

/// Replay a stored decision against the square: true exactly when every
/// stored claim re-checks. Never throws on a bad certificate.
template <class C, class F>
bool verify_decision(const KernelDecision<C, F>& d, CommutingSquare<C, F>& sq) {
    try {
        const RfPresentation<C>& Rf = sq.Rf();
        if (d.in_Sf) {
            if (!d.delta) return false;
            const ValueReading vr = sq.extension().value_of(sq.setup().theta_poly(d.q));
            if (!vr.value.is_finite()) return false;
            if (vr.value != d.delta->value) return false;
            return vr.value.amount() < d.delta->precision;
        }
        if (!d.witness) return false;
        const NilpotentCertificate<C>& w = *d.witness;
        if (w.exponent < 1) return false;
        if (sq.extension().is_zero(sq.setup().theta_poly(w.zeta))) return false;
        const RPoly<C> zg = Rf.mul(w.zeta, d.q);
        if (!(Rf.nf(zg - w.zeta_gamma).is_zero())) return false;
        RPoly<C> zp = RPoly<C>::constant(sq.ring().one());
        for (long long n = 0; n < w.exponent; ++n) zp = Rf.mul(zp, zg);
        return zp.is_zero();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace hensel
