#pragma once

#include "hensel/lifting.hpp"

namespace hensel {

struct PrecisionPolicy {
    int initial = 8;
    int growth = 2;
    int max = 512;
};

class PrecisionExhausted : public std::runtime_error {
public:
    PrecisionExhausted(int needed, int limit)
        : std::runtime_error("precision exhausted: needed " + std::to_string(needed) +
                             " > limit " + std::to_string(limit)),
          needed_(needed),
          limit_(limit) {}
    int needed() const { return needed_; }
    int limit() const { return limit_; }

private:
    int needed_;
    int limit_;
};

/// How a value or zero-test was certified: the answer plus the working
/// precision that justified it, so the decision can be replayed.
struct ValueReading {
    Value value;
    int precision;
};

/// The simple extension (K[alpha], V_alpha) attached to a Nagata polynomial:
/// alpha is the henselian zero of f, held as a truncated representative and
/// refined lazily under the precision policy. Valuations and zero-tests of
/// Q(alpha) are decided exactly through the resultant bound
///   v(Q(alpha)) <= v(Res(f, Q)) - (n-1) * min_j v(Q_j)
/// after gcd factors of f shared with Q (which either vanish at alpha or are
/// units there) have been split off.
template <class F>
class Extension {
public:
    using Elem = typename F::Elem;
    using Rep = typename F::Rep;

    Extension(F K, FieldPoly<F> f, PrecisionPolicy policy = {})
        : K_(std::move(K)), f_(std::move(f)), policy_(policy) {
        if (!is_nagata(f_, K_))
            throw std::invalid_argument("Extension: polynomial is not Nagata");
        if (policy_.initial < 1 || policy_.growth < 2 || policy_.max < policy_.initial)
            throw std::invalid_argument("Extension: malformed precision policy");
        alpha_ = hensel_lift(f_, K_, policy_.initial);
    }

    const F& field() const { return K_; }
    const FieldPoly<F>& f() const { return f_; }
    int degree() const { return f_.degree(); }
    int precision() const { return alpha_.prec; }
    const PrecisionPolicy& policy() const { return policy_; }

    /// alpha truncated to exactly N digits, refining first if needed.
    Rep alpha(int N) {
        refine_to(N);
        return K_.tlower(alpha_.rep, N);
    }

    /// Grow the stored precision to at least N, in policy-sized steps.
    /// Refinement is checked for consistency: the new representative must
    /// truncate back to the old one.
    void refine_to(int N) {
        if (N <= alpha_.prec) return;
        if (N > policy_.max) throw PrecisionExhausted(N, policy_.max);
        int target = alpha_.prec;
        while (target < N) target *= policy_.growth;
        if (target > policy_.max) target = policy_.max;
        TruncElem<Rep> next = hensel_lift(f_, K_, target);
        if (!(K_.tlower(next.rep, alpha_.prec) == alpha_.rep))
            throw std::logic_error("Extension: refinement disagrees with held approximation");
        alpha_ = std::move(next);
    }

    /// v(Q(alpha)) with the certifying precision. Exact: ∞ means Q(alpha)=0.
    ValueReading value_of(const FieldPoly<F>& Q) {
        FieldPoly<F> e = divmod_monic(Q, f_).second;
        if (e.is_zero()) return {Value::infinity(), alpha_.prec};

        // Split off factors shared with f: each one either vanishes at alpha
        // (so Q(alpha) = 0) or is a unit there, certified at precision 1.
        while (true) {
            FieldPoly<F> d = gcd_poly(f_, e);
            if (d.degree() == 0) break;
            if (K_.tis_zero(eval_at_trunc(d, alpha(1), K_, 1)))
                return {Value::infinity(), alpha_.prec};
            e = divmod_field(e, d).first;
        }

        long long m0 = 0;
        bool first = true;
        for (const Elem& c : e.coeffs()) {
            const Value v = K_.valuation(c);
            if (v.is_infinity()) continue;
            if (first || v.amount() < m0) m0 = v.amount();
            first = false;
        }
        // Constant remainder: the value is read off exactly. Report a
        // certifying precision strictly above the value itself.
        if (e.degree() == 0)
            return {Value(m0), static_cast<int>(std::max<long long>(alpha_.prec, m0 + 1))};

        const Elem rescale = elem_pow(K_, K_.uniformiser(), -m0);
        const FieldPoly<F> ehat = rescale * e;
        const Value vres = K_.valuation(resultant(f_, ehat));
        if (vres.is_infinity())
            throw std::logic_error("Extension: resultant vanished after gcd split");
        const long long bound = vres.amount();
        const int P = static_cast<int>(bound) + 1;
        const Rep r = eval_at_trunc(ehat, alpha(P), K_, P);
        const auto tv = K_.tvaluation(r);
        if (!tv.has_value() || *tv > bound)
            throw std::logic_error("Extension: evaluation exceeded its certified bound");
        // The evaluation certifies ehat(alpha) modulo pi^P; adding back the
        // exact rescale, Q(alpha) is pinned modulo pi^(m0+P), which always
        // lies strictly above the reported value m0 + tv.
        return {Value(m0 + *tv), static_cast<int>(m0 + P)};
    }

    /// Is Q(alpha) = 0 in K[alpha]? Decided without any valuation bound: if
    /// gcd(f, Q) is constant the resultant is a nonzero scalar and alpha is
    /// no root; otherwise the gcd factor decides at precision 1.
    ValueReading zero_reading(const FieldPoly<F>& Q) {
        FieldPoly<F> e = divmod_monic(Q, f_).second;
        if (e.is_zero()) return {Value::infinity(), 1};
        FieldPoly<F> d = gcd_poly(f_, e);
        if (d.degree() == 0) return {Value(0), 1};  // value field unused; finite = nonzero
        const bool zero = K_.tis_zero(eval_at_trunc(d, alpha(1), K_, 1));
        return {zero ? Value::infinity() : Value(0), 1};
    }

    bool is_zero(const FieldPoly<F>& Q) { return zero_reading(Q).value.is_infinity(); }

    /// For Q with v(Q(alpha)) = 0: the base-field constant c with
    /// v(Q(alpha) - c) > 0 (residue-field preservation, read off alpha).
    Elem residue_of_value(const FieldPoly<F>& Q) {
        FieldPoly<F> e = divmod_monic(Q, f_).second;
        long long m0 = 0;
        for (const Elem& c : e.coeffs()) {
            const Value v = K_.valuation(c);
            if (v.is_finite() && v.amount() < m0) m0 = v.amount();
        }
        const int k = static_cast<int>(-m0);
        const FieldPoly<F> qhat = elem_pow(K_, K_.uniformiser(), k) * e;
        const Rep r = eval_at_trunc(qhat, alpha(k + 1), K_, k + 1);
        return K_.pi_coefficient_lift(r, k);
    }

private:
    F K_;
    FieldPoly<F> f_;
    PrecisionPolicy policy_;
    TruncElem<Rep> alpha_{};
};

}  // namespace hensel
