#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hensel/local_ring.hpp>

#include <random>

using namespace hensel;

namespace {

using QRing = FPLocalRing<Rat>;

QRing ring_uw() { return QRing({"u", "w"}, std::vector<std::string>{"u*w"}, Rat(1)); }
QRing ring_u2() { return QRing({"u"}, std::vector<std::string>{"u^2"}, Rat(1)); }
QRing ring_w() { return QRing({"w"}, std::vector<std::string>{}, Rat(1)); }

/// Random small element given as a polynomial of total degree <= 2.
MPoly<Rat> random_element(const QRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    MPoly<Rat> acc = R.zero();
    acc = acc + MPoly<Rat>::constant(R.nvars(), Rat(coeff(rng)));
    for (size_t i = 0; i < R.nvars(); ++i) {
        acc = acc + MPoly<Rat>::constant(R.nvars(), Rat(coeff(rng))) * R.variable(i);
        for (size_t j = i; j < R.nvars(); ++j)
            acc = acc + MPoly<Rat>::constant(R.nvars(), Rat(coeff(rng))) * R.variable(i) *
                            R.variable(j);
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Groebner plumbing underneath the presentations
// ---------------------------------------------------------------------------

TEST_CASE("buchberger bases decide membership with exact cofactors") {
    // I = (x^2 - y, x*y) in Q[x,y]: completing the basis adds y^2.
    std::vector<std::string> vars{"x", "y"};
    const Rat one(1);
    auto P = [&](const char* s) { return parse_mpoly<Rat>(s, vars, one); };

    const GroebnerBasis<Rat> gb =
        buchberger(std::vector<MPoly<Rat>>{P("x^2 - y"), P("x*y")}, 2);
    CHECK(normal_form(P("x^3"), gb).is_zero());        // x^3 = x*(x^2-y) + x*y
    CHECK(normal_form(P("y^2"), gb).is_zero());        // y^2 = -y*(x^2-y) + x*(x*y)
    CHECK(normal_form(P("x^2"), gb) == P("y"));
    CHECK_FALSE(normal_form(P("x"), gb).is_zero());
    CHECK_FALSE(normal_form(P("1"), gb).is_zero());

    // Membership comes with cofactors over the original generators; replay
    // the combination exactly.
    std::vector<MPoly<Rat>> cof;
    REQUIRE(ideal_member(P("x^3 + y^2"), gb, &cof));
    REQUIRE(cof.size() == 2);
    MPoly<Rat> recombined = cof[0] * P("x^2 - y") + cof[1] * P("x*y");
    CHECK(recombined == P("x^3 + y^2"));
    CHECK_FALSE(ideal_member(P("x + y"), gb));
}

TEST_CASE("normal forms in a presented local ring") {
    const QRing R = ring_uw();
    const MPoly<Rat> u = R.variable(0);
    const MPoly<Rat> w = R.variable(1);

    CHECK(R.nf(u * w).is_zero());
    CHECK(R.nf(u + u * w) == u);
    CHECK(R.nf((u + w) * (u + w)) == R.nf(u * u + w * w));
    CHECK(R.equal((u + w) * (u + w), u * u + w * w));

    // Idempotence and compatibility with the ring operations.
    std::mt19937_64 rng(20240821);
    for (int trial = 0; trial < 60; ++trial) {
        const MPoly<Rat> a = random_element(R, rng);
        const MPoly<Rat> b = random_element(R, rng);
        CHECK(R.nf(R.nf(a)) == R.nf(a));
        CHECK(R.nf(a + b) == R.nf(R.nf(a) + R.nf(b)));
        CHECK(R.nf(a * b) == R.nf(R.nf(a) * R.nf(b)));
        CHECK(R.nf(a - b) == R.nf(R.nf(a) - R.nf(b)));
    }
}

TEST_CASE("units are read off the residue") {
    const QRing R = ring_uw();
    const MPoly<Rat> u = R.variable(0);
    const MPoly<Rat> w = R.variable(1);

    CHECK(R.is_unit(R.one() + u));
    CHECK_FALSE(R.is_unit(u));
    CHECK(R.is_unit(R.one() + R.one() + u * w));  // residue 2
    CHECK_FALSE(R.is_unit(R.zero()));
    CHECK(R.residue(R.one() + R.one() + u * w) == Rat(2));
    CHECK(R.residue(u + w) == Rat(0));
}

TEST_CASE("localisation elements keep unit denominators") {
    const QRing R = ring_uw();
    const MPoly<Rat> u = R.variable(0);
    const MPoly<Rat> w = R.variable(1);

    const RingElem<Rat> a = make_elem(R, u, R.one() + w);
    const RingElem<Rat> b = make_elem(R, w);
    CHECK_THROWS_AS(make_elem(R, R.one(), u), std::invalid_argument);
    CHECK_THROWS_AS(elem_normal_form(R, RingElem<Rat>{R.one(), u}), std::invalid_argument);

    // u/(1+w) equals u: cross-multiplying kills the uw term.
    CHECK(elem_equal(R, a, make_elem(R, u)));
    const RingElem<Rat> s = elem_add(R, a, b);
    CHECK(elem_equal(R, s, make_elem(R, u + w + w * w, R.one() + w)));
    CHECK(elem_is_zero(R, elem_mul(R, a, b)));  // (u/(1+w))*w = uw/(1+w) = 0
    CHECK(elem_is_unit(R, elem_add(R, make_elem(R, R.one()), a)));
    CHECK_FALSE(elem_is_unit(R, a));
}

TEST_CASE("nilpotency exponents by bounded search") {
    const QRing R2 = ring_u2();
    const QRing Ruw = ring_uw();

    CHECK(R2.nilpotency_exponent(R2.variable(0), 8) == 2);
    CHECK(Ruw.nilpotency_exponent(Ruw.variable(0) * Ruw.variable(1), 8) == 1);
    CHECK_FALSE(Ruw.nilpotency_exponent(Ruw.variable(1), 6).has_value());
    CHECK(elem_nilpotency(R2, make_elem(R2, R2.variable(0), R2.one() + R2.variable(0)), 8) == 2);
}

// ---------------------------------------------------------------------------
// The one-step extension R_f and its monoid
// ---------------------------------------------------------------------------

TEST_CASE("building R_f over the localised polynomial ring") {
    const QRing R = ring_w();
    const MPoly<Rat> w = R.variable(0);
    // f = X^2 + X + w.
    const RPoly<Rat> f(std::vector<MPoly<Rat>>{w, R.one(), R.one()});
    const RfPresentation<Rat> Rf = build_Rf(R, f);
    CHECK(Rf.degree() == 2);
    CHECK(Rf.f == f);

    // x ~ 0 residually solves f residually: the constant term has residue 0.
    CHECK(R.residue(Rf.f.coeff_or(0, R.zero())) == Rat(0));
    CHECK(R.is_unit(Rf.f.coeff_or(1, R.zero())));

    // Reduction works modulo f: x^2 = -x - w.
    const RPoly<Rat> x = RPoly<Rat>::monomial(R.one(), 1);
    CHECK(Rf.nf(x * x) == Rf.nf(RPoly<Rat>::constant(R.zero()) - x - RPoly<Rat>::constant(w)));

    // Shape violations are rejected.
    CHECK_THROWS_AS(build_Rf(R, RPoly<Rat>(std::vector<MPoly<Rat>>{R.one(), R.one(), R.one()})),
                    std::invalid_argument);  // constant term a unit
    CHECK_THROWS_AS(build_Rf(R, RPoly<Rat>(std::vector<MPoly<Rat>>{w, w, R.one()})),
                    std::invalid_argument);  // linear term not a unit
    CHECK_THROWS_AS(build_Rf(R, RPoly<Rat>(std::vector<MPoly<Rat>>{w, R.one()+R.one(), R.one() + R.one()})),
                    std::invalid_argument);  // not monic
}

TEST_CASE("membership in the monoid S") {
    const QRing R = ring_w();
    const MPoly<Rat> w = R.variable(0);
    const RPoly<Rat> x = RPoly<Rat>::monomial(R.one(), 1);

    CHECK(in_S(R, RPoly<Rat>::constant(R.one()) + x));
    CHECK_FALSE(in_S(R, x));
    CHECK(in_S(R, RPoly<Rat>::constant(R.one() + R.one() + w) + x));  // 2 + w + x
    CHECK(in_S(R, RPoly<Rat>::constant(R.one())));                    // 1 is in S

    // S is closed under products: the constant terms multiply.
    std::mt19937_64 rng(20240822);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> unit(1, 3);
    const RfPresentation<Rat> Rf = build_Rf(
        R, RPoly<Rat>(std::vector<MPoly<Rat>>{w, R.one(), R.one()}));
    for (int trial = 0; trial < 40; ++trial) {
        auto rand_S = [&]() {
            std::vector<MPoly<Rat>> c;
            c.push_back(MPoly<Rat>::constant(1, Rat(unit(rng))) + w * MPoly<Rat>::constant(1, Rat(coeff(rng))));
            c.push_back(MPoly<Rat>::constant(1, Rat(coeff(rng))));
            return RPoly<Rat>(std::move(c));
        };
        const RPoly<Rat> g1 = rand_S();
        const RPoly<Rat> g2 = rand_S();
        REQUIRE(in_S(R, g1));
        REQUIRE(in_S(R, g2));
        CHECK(in_S(R, g1 * g2));
        // The residue of the class is representative-independent.
        CHECK(in_S(R, Rf.nf(g1 * g2)));
    }
}

TEST_CASE("the residue field survives the extension") {
    const QRing R = ring_uw();
    const RPoly<Rat> f(std::vector<MPoly<Rat>>{R.variable(1), R.one(), R.one()});
    const RfPresentation<Rat> Rf = build_Rf(R, f);

    // Both maximal-ideal generators die residually; constants pass through.
    CHECK(R.residue(R.variable(0)) == Rat(0));
    CHECK(R.residue(R.variable(1)) == Rat(0));
    CHECK(R.residue(R.one()) == Rat(1));
    for (int c = -3; c <= 3; ++c)
        CHECK(R.residue(MPoly<Rat>::constant(2, Rat(c))) == Rat(c));
    // And x itself is residually 0: its class has zero constant term.
    const RPoly<Rat> x = RPoly<Rat>::monomial(R.one(), 1);
    CHECK(R.residue(Rf.nf(x).coeff_or(0, R.zero())) == Rat(0));
}

TEST_CASE("a reduced base keeps R_f reduced in bounded samples") {
    const QRing R = ring_uw();
    const RPoly<Rat> f(std::vector<MPoly<Rat>>{R.variable(1), R.one(), R.one()});
    const RfPresentation<Rat> Rf = build_Rf(R, f);

    std::mt19937_64 rng(20240823);
    std::uniform_int_distribution<int> coeff(-2, 2);
    int nonzero_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<MPoly<Rat>> c;
        for (int i = 0; i < 2; ++i) {
            MPoly<Rat> m = MPoly<Rat>::constant(2, Rat(coeff(rng)));
            m = m + R.variable(0) * MPoly<Rat>::constant(2, Rat(coeff(rng)));
            m = m + R.variable(1) * MPoly<Rat>::constant(2, Rat(coeff(rng)));
            c.push_back(std::move(m));
        }
        const RPoly<Rat> e = Rf.nf(RPoly<Rat>(std::move(c)));
        if (e.is_zero()) continue;
        ++nonzero_seen;
        CHECK_FALSE(Rf.nilpotency_exponent(e, 4).has_value());
    }
    CHECK(nonzero_seen > 60);
}
