#pragma once

#include "hensel/mpoly.hpp"

#include <deque>
#include <numeric>

namespace hensel {

/// Multivariate division with quotient tracking: f = sum_i quotients[i] *
/// divisors[i] + remainder, and no term of the remainder is divisible by any
/// divisor's leading monomial (grlex).
template <class C>
struct DivisionResult {
    std::vector<MPoly<C>> quotients;
    MPoly<C> remainder;
};

template <class C>
DivisionResult<C> divide_tracked(const MPoly<C>& f, const std::vector<MPoly<C>>& divisors) {
    const size_t nv = f.nvars();
    DivisionResult<C> out{std::vector<MPoly<C>>(divisors.size(), MPoly<C>(nv)), MPoly<C>(nv)};
    MPoly<C> p = f;
    while (!p.is_zero()) {
        const Mono& lm = p.lead_mono();
        const C& lc = p.lead_coeff();
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            const MPoly<C>& d = divisors[i];
            if (d.is_zero() || !d.lead_mono().divides(lm)) continue;
            C coeff = lc / d.lead_coeff();
            MPoly<C> t = MPoly<C>::term(nv, lm.quotient(d.lead_mono()), std::move(coeff));
            out.quotients[i] = out.quotients[i] + t;
            p = p - t * d;
            reduced = true;
            break;
        }
        if (!reduced) {
            MPoly<C> t = MPoly<C>::term(nv, lm, lc);
            out.remainder = out.remainder + t;
            p = p - t;
        }
    }
    return out;
}

/// Reduced Groebner basis (grlex) with a representation of every basis
/// element over the original generators: gens[i] = sum_j reps[i][j] *
/// original[j]. The reduced basis is unique, so equal ideals produce equal
/// bases; the element order (descending leading monomial) is deterministic.
template <class C>
struct GroebnerBasis {
    size_t nvars = 0;
    std::vector<MPoly<C>> original;
    std::vector<MPoly<C>> gens;
    std::vector<std::vector<MPoly<C>>> reps;
};

template <class C>
GroebnerBasis<C> buchberger(std::vector<MPoly<C>> input, size_t nvars) {
    GroebnerBasis<C> gb;
    gb.nvars = nvars;
    gb.original = input;
    const size_t m = input.size();

    struct Entry {
        MPoly<C> poly;
        std::vector<MPoly<C>> rep;
    };
    std::vector<Entry> basis;
    auto unit_rep = [&](size_t j) {
        std::vector<MPoly<C>> r(m, MPoly<C>(nvars));
        r[j] = MPoly<C>::constant(nvars, one_like(input[j].lead_coeff()));
        return r;
    };
    for (size_t j = 0; j < m; ++j) {
        if (input[j].nvars() != nvars)
            throw std::invalid_argument("buchberger: generator arity mismatch");
        if (!input[j].is_zero()) basis.push_back({input[j], unit_rep(j)});
    }

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    auto reduce_tracked = [&](MPoly<C> p, std::vector<MPoly<C>> rep) -> Entry {
        while (!p.is_zero()) {
            bool hit = false;
            for (const Entry& e : basis) {
                if (!e.poly.lead_mono().divides(p.lead_mono())) continue;
                C coeff = p.lead_coeff() / e.poly.lead_coeff();
                MPoly<C> t =
                    MPoly<C>::term(nvars, p.lead_mono().quotient(e.poly.lead_mono()), coeff);
                p = p - t * e.poly;
                for (size_t j = 0; j < m; ++j) rep[j] = rep[j] - t * e.rep[j];
                hit = true;
                break;
            }
            if (!hit) break;  // leading term irreducible: p itself is the new element
        }
        return {std::move(p), std::move(rep)};
    };

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const MPoly<C>& gi = basis[i].poly;
        const MPoly<C>& gj = basis[j].poly;
        const Mono lcm = Mono::lcm(gi.lead_mono(), gj.lead_mono());
        if (lcm == gi.lead_mono() * gj.lead_mono()) continue;  // product criterion
        const C one = one_like(gi.lead_coeff());
        MPoly<C> ui = MPoly<C>::term(nvars, lcm.quotient(gi.lead_mono()), one / gi.lead_coeff());
        MPoly<C> uj = MPoly<C>::term(nvars, lcm.quotient(gj.lead_mono()), one / gj.lead_coeff());
        MPoly<C> s = ui * gi - uj * gj;
        std::vector<MPoly<C>> rep(m, MPoly<C>(nvars));
        for (size_t t = 0; t < m; ++t) rep[t] = ui * basis[i].rep[t] - uj * basis[j].rep[t];
        Entry r = reduce_tracked(std::move(s), std::move(rep));
        // A nonzero result can still have a reducible tail; only the head
        // matters for the pair set, so keep it as-is and reduce tails later.
        if (r.poly.is_zero()) continue;
        basis.push_back(std::move(r));
        const size_t nw = basis.size() - 1;
        for (size_t t = 0; t < nw; ++t) pairs.emplace_back(t, nw);
    }

    // Minimalise: drop elements whose leading monomial is divisible by
    // another kept one. Ascending grlex guarantees divisors come first.
    std::vector<size_t> order(basis.size());
    std::iota(order.begin(), order.end(), size_t{0});
    GrlexGreater gt;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (basis[a].poly.lead_mono() != basis[b].poly.lead_mono())
            return gt(basis[b].poly.lead_mono(), basis[a].poly.lead_mono());
        return a < b;
    });
    std::vector<size_t> kept;
    for (size_t idx : order) {
        const Mono& lm = basis[idx].poly.lead_mono();
        bool divisible = false;
        for (size_t k : kept)
            if (basis[k].poly.lead_mono().divides(lm)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(idx);
    }

    // Inter-reduce tails and normalise to monic; then emit in descending
    // leading-monomial order.
    std::vector<Entry> reduced;
    for (size_t pos = 0; pos < kept.size(); ++pos) {
        const Entry& e = basis[kept[pos]];
        std::vector<MPoly<C>> others;
        for (size_t q = 0; q < kept.size(); ++q)
            if (q != pos) others.push_back(basis[kept[q]].poly);
        DivisionResult<C> dv = divide_tracked(e.poly, others);
        std::vector<MPoly<C>> rep = e.rep;
        size_t oi = 0;
        for (size_t q = 0; q < kept.size(); ++q) {
            if (q == pos) continue;
            for (size_t t = 0; t < m; ++t)
                rep[t] = rep[t] - dv.quotients[oi] * basis[kept[q]].rep[t];
            ++oi;
        }
        const C inv = one_like(dv.remainder.lead_coeff()) / dv.remainder.lead_coeff();
        MPoly<C> inv_c = MPoly<C>::constant(nvars, inv);
        Entry out{inv * dv.remainder, {}};
        out.rep.reserve(m);
        for (size_t t = 0; t < m; ++t) out.rep.push_back(inv_c * rep[t]);
        reduced.push_back(std::move(out));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Entry& a, const Entry& b) {
        return gt(a.poly.lead_mono(), b.poly.lead_mono());
    });
    for (Entry& e : reduced) {
        gb.gens.push_back(std::move(e.poly));
        gb.reps.push_back(std::move(e.rep));
    }
    return gb;
}

template <class C>
MPoly<C> normal_form(const MPoly<C>& f, const GroebnerBasis<C>& gb) {
    if (f.nvars() != gb.nvars) throw std::invalid_argument("normal_form: arity mismatch");
    return divide_tracked(f, gb.gens).remainder;
}

/// Ideal membership; on success optionally fills cofactors over the ORIGINAL
/// generators: f = sum_j cofactors[j] * original[j].
template <class C>
bool ideal_member(const MPoly<C>& f, const GroebnerBasis<C>& gb,
                  std::vector<MPoly<C>>* cofactors = nullptr) {
    DivisionResult<C> dv = divide_tracked(f, gb.gens);
    if (!dv.remainder.is_zero()) return false;
    if (cofactors) {
        cofactors->assign(gb.original.size(), MPoly<C>(gb.nvars));
        for (size_t i = 0; i < gb.gens.size(); ++i) {
            if (dv.quotients[i].is_zero()) continue;
            for (size_t j = 0; j < gb.original.size(); ++j)
                (*cofactors)[j] = (*cofactors)[j] + dv.quotients[i] * gb.reps[i][j];
        }
    }
    return true;
}

}  // namespace hensel
