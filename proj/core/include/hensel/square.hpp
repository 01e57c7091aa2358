#pragma once

#include "hensel/extension.hpp"
#include "hensel/setup.hpp"

namespace hensel {

// ---------------------------------------------------------------------------
// One Nagata polynomial f over R, its image f1 over the valued field, and
// the two one-step henselisations R_f and V[X]/(f1) glued along θ. All later
// decisions about ker θ_f run against this object; it owns the certified
// extension and refines its precision in place, so use from one thread at a
// time.
// ---------------------------------------------------------------------------

template <class C, class F>
class CommutingSquare {
public:
    CommutingSquare(MinimalValuationSetup<C, F> setup, const RPoly<C>& f,
                    PrecisionPolicy policy = {})
        : setup_(validated(std::move(setup))),
          Rf_(build_Rf(setup_.ring(), f)),
          f1_(setup_.theta_poly(Rf_.f)),
          E_(setup_.field(), f1_, policy) {}

    const MinimalValuationSetup<C, F>& setup() const { return setup_; }
    const FPLocalRing<C>& ring() const { return setup_.ring(); }
    const F& field() const { return setup_.field(); }
    const RfPresentation<C>& Rf() const { return Rf_; }
    const FieldPoly<F>& f1() const { return f1_; }
    Extension<F>& extension() { return E_; }

    /// Push a polynomial over R down both sides of the square and compare:
    /// θ_f(π_f(r)) against π_α(θ[X](r)). Zero difference is certified by the
    /// extension's exact zero test.
    bool commutes_on(const RPoly<C>& r) {
        const FieldPoly<F> lhs = setup_.theta_poly(Rf_.nf(r));
        const FieldPoly<F> rhs = divmod_monic(setup_.theta_poly(r), f1_).second;
        return E_.is_zero(lhs - rhs);
    }

    /// Commutation on a deterministic generating sample: the ring variables,
    /// the adjoined root, and products mixing the two.
    bool check_commutation() {
        const FPLocalRing<C>& R = ring();
        std::vector<RPoly<C>> sample;
        const RPoly<C> x = RPoly<C>::monomial(R.one(), 1);
        sample.push_back(x);
        sample.push_back(Rf_.f);
        for (size_t i = 0; i < R.nvars(); ++i) {
            const RPoly<C> v = RPoly<C>::constant(R.variable(i));
            sample.push_back(v);
            sample.push_back(x * v + RPoly<C>::constant(R.one()));
            sample.push_back((x + v) * (x + v));
        }
        sample.push_back(x * x * x + x);
        for (const RPoly<C>& r : sample)
            if (!commutes_on(r)) return false;
        return true;
    }

private:
    static MinimalValuationSetup<C, F> validated(MinimalValuationSetup<C, F> s) {
        require_valid_setup(s);
        return s;
    }

    MinimalValuationSetup<C, F> setup_;
    RfPresentation<C> Rf_;
    FieldPoly<F> f1_;
    Extension<F> E_;
};

}  // namespace hensel
