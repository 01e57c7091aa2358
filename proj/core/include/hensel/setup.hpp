#pragma once

#include "hensel/lifting.hpp"
#include "hensel/local_ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hensel {

// ---------------------------------------------------------------------------
// Embedding of the ring's coefficient field into the target valued field.
// The pairs that make sense (Q into Q_p or Q(t), F_q into F_q(t)) are exactly
// the ones that compile.
// ---------------------------------------------------------------------------

inline Rat embed_scalar(const PadicField&, const Rat& c) { return c; }

template <class CF>
RatFunc<typename CF::Elem> embed_scalar(const TadicField<CF>& K,
                                        const typename CF::Elem& c) {
    return RatFunc<typename CF::Elem>::constant(c, K.coeff_field().one());
}

/// A stored nilpotency certificate for one prime generator a: an element b
/// outside the prime with (b*a)^N = 0.
template <class C>
struct MinimalityWitness {
    MPoly<C> b;
    long long N;
};

class SetupError : public std::runtime_error {
public:
    SetupError(std::string axiom, std::string counterexample)
        : std::runtime_error("setup axiom failed: " + axiom +
                             (counterexample.empty() ? "" : " (at " + counterexample + ")")),
          axiom_(std::move(axiom)),
          counterexample_(std::move(counterexample)) {}
    const std::string& axiom() const { return axiom_; }
    const std::string& counterexample() const { return counterexample_; }

private:
    std::string axiom_;
    std::string counterexample_;
};

// ---------------------------------------------------------------------------
// A local ring R with a valuation v = v_K ∘ θ whose infinity-set is the
// minimal prime p: the data against which the kernel decision runs. θ is
// given on the ring variables; p by generators; minimality by one witness
// per generator.
// ---------------------------------------------------------------------------

template <class C, class F>
class MinimalValuationSetup {
public:
    using Elem = typename F::Elem;

    MinimalValuationSetup(FPLocalRing<C> R, F K, std::vector<Elem> theta_images,
                          std::vector<MPoly<C>> prime_generators,
                          std::vector<MinimalityWitness<C>> witnesses)
        : R_(std::move(R)),
          K_(std::move(K)),
          theta_images_(std::move(theta_images)),
          prime_generators_(std::move(prime_generators)),
          witnesses_(std::move(witnesses)) {
        if (theta_images_.size() != R_.nvars())
            throw std::invalid_argument("setup: one theta image per ring variable required");
        if (witnesses_.size() != prime_generators_.size())
            throw std::invalid_argument("setup: one witness per prime generator required");
        // Membership in p is decided against p + I inside the presentation;
        // cofactors over the combined list start with the prime generators.
        std::vector<MPoly<C>> combined = prime_generators_;
        for (const MPoly<C>& g : R_.ideal_gens()) combined.push_back(g);
        p_basis_ = buchberger(std::move(combined), R_.nvars());
    }

    const FPLocalRing<C>& ring() const { return R_; }
    const F& field() const { return K_; }
    const std::vector<Elem>& theta_images() const { return theta_images_; }
    const std::vector<MPoly<C>>& prime_generators() const { return prime_generators_; }
    const std::vector<MinimalityWitness<C>>& witnesses() const { return witnesses_; }
    const GroebnerBasis<C>& p_basis() const { return p_basis_; }

    /// θ evaluated on a representative; well defined on R once the ideal
    /// generators are known to map to 0.
    Elem theta(const MPoly<C>& a) const {
        Elem acc = K_.zero();
        for (const auto& [mono, coeff] : a.terms()) {
            Elem term = embed_scalar(K_, coeff);
            for (size_t i = 0; i < mono.e.size(); ++i)
                for (unsigned k = 0; k < mono.e[i]; ++k) term = term * theta_images_[i];
            acc = acc + term;
        }
        return acc;
    }

    /// θ[X]: coefficientwise application to polynomials over R.
    FieldPoly<F> theta_poly(const RPoly<C>& p) const {
        std::vector<Elem> c;
        c.reserve(static_cast<size_t>(p.degree() + 1));
        for (const MPoly<C>& x : p.coeffs()) c.push_back(theta(x));
        return FieldPoly<F>(std::move(c));
    }

    /// v = v_K ∘ θ, the valuation the setup places on R.
    Value value(const MPoly<C>& a) const { return K_.valuation(theta(a)); }

    bool in_p(const MPoly<C>& a) const { return ideal_member(a, p_basis_); }

private:
    FPLocalRing<C> R_;
    F K_;
    std::vector<Elem> theta_images_;
    std::vector<MPoly<C>> prime_generators_;
    std::vector<MinimalityWitness<C>> witnesses_;
    GroebnerBasis<C> p_basis_;
};

/// For a ∈ p: an element b outside p and an exponent N with (b·a)^N = 0,
/// assembled from the per-generator witnesses along a Groebner expression of
/// a over the prime generators, then shrunk to the least verified exponent.
template <class C, class F>
std::pair<MPoly<C>, long long> minimality_witness(const MPoly<C>& a,
                                                  const MinimalValuationSetup<C, F>& s) {
    const FPLocalRing<C>& R = s.ring();
    std::vector<MPoly<C>> cof;
    if (!ideal_member(a, s.p_basis(), &cof))
        throw std::invalid_argument(
            "minimality_witness: element is not expressible over the prime generators");

    MPoly<C> b = R.one();
    long long bound = 0;
    for (size_t j = 0; j < s.prime_generators().size(); ++j) {
        if (cof[j].is_zero()) continue;
        b = b * s.witnesses()[j].b;
        bound += s.witnesses()[j].N;
    }
    if (bound < 1) bound = 1;  // a may reduce to 0 without touching the prime generators
    b = R.nf(b);

    const MPoly<C> ba = R.nf(b * a);
    MPoly<C> pw = R.one();
    for (long long n = 1; n <= bound; ++n) {
        pw = R.nf(pw * ba);
        if (pw.is_zero()) return {b, n};
    }
    throw std::logic_error("minimality_witness: stored witnesses do not annihilate");
}

// ---------------------------------------------------------------------------
// Axiom validation
// ---------------------------------------------------------------------------

struct AxiomCheck {
    std::string axiom;
    bool pass;
    std::string counterexample;  // empty when the check passed
};

struct SetupReport {
    std::vector<AxiomCheck> checks;
    bool ok = true;
};

namespace detail {

/// Deterministic sample of ring elements: variables, pairwise sums and
/// products, unit shifts, and the prime generators themselves.
template <class C, class F>
std::vector<MPoly<C>> setup_sample(const MinimalValuationSetup<C, F>& s) {
    const FPLocalRing<C>& R = s.ring();
    std::vector<MPoly<C>> out;
    out.push_back(R.one());
    for (size_t i = 0; i < R.nvars(); ++i) out.push_back(R.variable(i));
    for (size_t i = 0; i < R.nvars(); ++i) {
        out.push_back(R.variable(i) + R.one());
        for (size_t j = i; j < R.nvars(); ++j) {
            out.push_back(R.variable(i) * R.variable(j));
            out.push_back(R.variable(i) + R.variable(j));
            out.push_back(R.variable(i) * R.variable(j) + R.one() + R.one());
        }
    }
    for (const MPoly<C>& g : s.prime_generators()) {
        out.push_back(g);
        for (size_t i = 0; i < R.nvars(); ++i) out.push_back(R.nf(g * R.variable(i)));
    }
    return out;
}

}  // namespace detail

/// Check every setup invariant; the report lists each axiom with pass/fail
/// and a counterexample element for failures.
template <class C, class F>
SetupReport validate_setup(const MinimalValuationSetup<C, F>& s) {
    const FPLocalRing<C>& R = s.ring();
    const F& K = s.field();
    SetupReport rep;
    auto record = [&](std::string axiom, bool pass, std::string ce) {
        if (!pass) rep.ok = false;
        rep.checks.push_back(AxiomCheck{std::move(axiom), pass, std::move(ce)});
    };

    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& g : R.ideal_gens())
            if (!is_zero_elem(s.theta(g))) {
                pass = false;
                ce = R.str(g);
                break;
            }
        record("theta kills the presentation ideal", pass, std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& g : s.prime_generators())
            if (!is_zero_elem(s.theta(g))) {
                pass = false;
                ce = R.str(g);
                break;
            }
        record("theta kills the prime generators", pass, std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (size_t j = 0; j < s.prime_generators().size(); ++j) {
            const auto& w = s.witnesses()[j];
            if (w.N < 1 || is_zero_elem(s.theta(w.b))) {
                pass = false;
                ce = R.str(w.b);
                break;
            }
            MPoly<C> pw = R.one();
            const MPoly<C> ba = R.nf(w.b * s.prime_generators()[j]);
            for (long long n = 0; n < w.N; ++n) pw = R.nf(pw * ba);
            if (!pw.is_zero()) {
                pass = false;
                ce = R.str(s.prime_generators()[j]);
                break;
            }
        }
        record("witnesses annihilate their prime generators", pass, std::move(ce));
    }

    const std::vector<MPoly<C>> sample = detail::setup_sample(s);
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& a : sample)
            if (s.value(a) < Value(0)) {
                pass = false;
                ce = R.str(a);
                break;
            }
        record("values are non-negative", pass, std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& a : sample) {
            for (const MPoly<C>& b : sample)
                if (s.value(R.nf(a * b)) != s.value(a) + s.value(b)) {
                    pass = false;
                    ce = R.str(a) + ", " + R.str(b);
                    break;
                }
            if (!pass) break;
        }
        record("value of a product is the sum of values", pass, std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& a : sample) {
            const MPoly<C> an = R.nf(a);
            const Value v = s.value(an);
            const bool unit_ok = R.is_unit(an) ? v == Value(0) : v > Value(0);
            if (!unit_ok) {
                pass = false;
                ce = R.str(an);
                break;
            }
        }
        record("value zero exactly on units, positive exactly on the maximal ideal", pass,
               std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& a : sample) {
            for (const MPoly<C>& b : sample)
                if (s.value(R.nf(a + b)) < min(s.value(a), s.value(b))) {
                    pass = false;
                    ce = R.str(a) + ", " + R.str(b);
                    break;
                }
            if (!pass) break;
        }
        record("ultrametric inequality", pass, std::move(ce));
    }
    {
        bool pass = true;
        std::string ce;
        for (const MPoly<C>& a : sample) {
            const MPoly<C> an = R.nf(a);
            if (!is_zero_elem(s.theta(an))) continue;
            try {
                const auto [b, N] = minimality_witness(an, s);
                MPoly<C> pw = R.one();
                const MPoly<C> ba = R.nf(b * an);
                for (long long n = 0; n < N; ++n) pw = R.nf(pw * ba);
                if (is_zero_elem(s.theta(b)) || !pw.is_zero()) {
                    pass = false;
                    ce = R.str(an);
                    break;
                }
            } catch (const std::exception&) {
                pass = false;
                ce = R.str(an);
                break;
            }
        }
        record("infinite-value elements have nilpotency witnesses", pass, std::move(ce));
    }

    return rep;
}

/// validate_setup, escalated to an exception carrying the first failure.
template <class C, class F>
void require_valid_setup(const MinimalValuationSetup<C, F>& s) {
    const SetupReport rep = validate_setup(s);
    if (rep.ok) return;
    for (const AxiomCheck& c : rep.checks)
        if (!c.pass) throw SetupError(c.axiom, c.counterexample);
}

// ---------------------------------------------------------------------------
// The shipped setup catalogue: all four target the w-adic valuation on Q(w).
// ---------------------------------------------------------------------------

using CatalogueField = TadicField<RatCoeffField>;
using CatalogueSetup = MinimalValuationSetup<Rat, CatalogueField>;

/// Q[w] localised, θ the identity: the domain case, p = 0.
inline CatalogueSetup catalogue_domain_Qw() {
    FPLocalRing<Rat> R({"w"}, std::vector<std::string>{}, Rat(1));
    CatalogueField K(RatCoeffField{}, "w");
    std::vector<CatalogueField::Elem> images{K.uniformiser()};
    return CatalogueSetup(std::move(R), std::move(K), std::move(images), {}, {});
}

/// Q[u,w]/(uw) localised, θ: u ↦ 0, w ↦ w: reduced but not a domain,
/// p = (u) with witness (w, 1).
inline CatalogueSetup catalogue_reduced_Quw() {
    FPLocalRing<Rat> R({"u", "w"}, std::vector<std::string>{"u*w"}, Rat(1));
    CatalogueField K(RatCoeffField{}, "w");
    std::vector<CatalogueField::Elem> images{K.zero(), K.uniformiser()};
    std::vector<MPoly<Rat>> prime{R.variable(0)};
    std::vector<MinimalityWitness<Rat>> wits{{R.variable(1), 1}};
    return CatalogueSetup(std::move(R), std::move(K), std::move(images), std::move(prime),
                          std::move(wits));
}

/// Q[u]/(u²) localised, θ: u ↦ 0: genuinely nilpotent, p = (u) with
/// witness (1, 2).
inline CatalogueSetup catalogue_dual_Qu() {
    FPLocalRing<Rat> R({"u"}, std::vector<std::string>{"u^2"}, Rat(1));
    CatalogueField K(RatCoeffField{}, "w");
    std::vector<CatalogueField::Elem> images{K.zero()};
    std::vector<MPoly<Rat>> prime{R.variable(0)};
    std::vector<MinimalityWitness<Rat>> wits{{R.one(), 2}};
    return CatalogueSetup(std::move(R), std::move(K), std::move(images), std::move(prime),
                          std::move(wits));
}

/// Q[u,w]/(u²) localised, θ: u ↦ 0, w ↦ w: nilpotents alongside a
/// surviving parameter, p = (u) with witness (1, 2).
inline CatalogueSetup catalogue_dual_Quw() {
    FPLocalRing<Rat> R({"u", "w"}, std::vector<std::string>{"u^2"}, Rat(1));
    CatalogueField K(RatCoeffField{}, "w");
    std::vector<CatalogueField::Elem> images{K.zero(), K.uniformiser()};
    std::vector<MPoly<Rat>> prime{R.variable(0)};
    std::vector<MinimalityWitness<Rat>> wits{{R.one(), 2}};
    return CatalogueSetup(std::move(R), std::move(K), std::move(images), std::move(prime),
                          std::move(wits));
}

}  // namespace hensel
