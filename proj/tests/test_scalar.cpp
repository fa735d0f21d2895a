#include "nctwist/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nct;

namespace {

ParamSymbol th() { return ParamSymbol::declare("theta", ParamKind::RealAdditive); }
ParamSymbol thA() { return ParamSymbol::declare("thA", ParamKind::RealAdditive); }
ParamSymbol qsym() { return ParamSymbol::declare("qq", ParamKind::PhaseUnit); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> nterms(0, 3);
    Scalar s;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        ParamMonomial m;
        if (small(rng) > 0) m.set(th().id(), ParamExp{std::abs(small(rng)) % 3, Rat(small(rng), 2)});
        if (small(rng) > 1) m.set(qsym().id(), ParamExp{small(rng), Rat(0)});
        Scalar t;
        t.add_term(m, GRat(Rat(small(rng)), Rat(small(rng))));
        s += t;
    }
    return s;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GRat i = GRat::imag_unit();
    CHECK(i * i == GRat(-1));
    CHECK((GRat(Rat(3), Rat(4)) * GRat(Rat(3), Rat(-4))) == GRat(Rat(25)));
    CHECK(GRat(Rat(1, 2)).inverse() == GRat(Rat(2)));
    CHECK((GRat(Rat(1), Rat(1)) / GRat(Rat(1), Rat(1))).is_one());
    CHECK_THROWS_AS(GRat().inverse(), std::domain_error);
}

TEST_CASE("conjugation fixes real-additive symbols and inverts phases") {
    // conj(i*theta) = -i*theta
    Scalar s = Scalar::imag_unit() * Scalar::symbol(th());
    CHECK(s.conj() == -s);
    // conj(q) = q^-1 for a phase unit
    Scalar q = Scalar::symbol(qsym());
    CHECK(q.conj() == q.inverse());
    // conj(3/2) = 3/2
    Scalar r(Rat(3, 2));
    CHECK(r.conj() == r);
    // conj(e^{i theta/2}) = e^{-i theta/2}
    Scalar ph = Scalar::phase(th(), Rat(1, 2));
    CHECK(ph.conj() == Scalar::phase(th(), Rat(-1, 2)));
    CHECK((ph * ph.conj()).is_one());
}

TEST_CASE("conj is involutive and multiplicative on random scalars") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("substitution") {
    Scalar expr = Scalar::phase(thA(), Rat(2)) * Scalar::symbol(thA());  // thA * e^{2 i thA}
    Substitution sub;
    // thA -> -theta/2, as in passing to the one-parameter family
    sub.bind(thA(), Scalar(Rat(-1, 2)) * Scalar::symbol(th()));
    Scalar img = sub.apply(expr);
    Scalar expect = Scalar(Rat(-1, 2)) * Scalar::symbol(th()) * Scalar::phase(th(), Rat(-1));
    CHECK(img == expect);

    // empty bindings = identity
    Substitution none;
    CHECK(none.apply(expr) == expr);

    // theta -> 0 untwists any phase
    Substitution zero;
    zero.bind(th(), Scalar::zero());
    CHECK(zero.apply(Scalar::phase(th(), Rat(5, 3))).is_one());

    // phase-unit symbols need invertible images
    Substitution bad;
    bad.bind(qsym(), Scalar::symbol(th()) + Scalar::one());
    CHECK_THROWS_AS(bad.apply(Scalar::symbol(qsym())), std::domain_error);

    Substitution good;
    good.bind(qsym(), Scalar::phase(th(), Rat(1)));
    CHECK(good.apply(Scalar::symbol(qsym(), -2)) == Scalar::phase(th(), Rat(-2)));
}

TEST_CASE("substitution composes on disjoint domains") {
    std::mt19937_64 rng(13);
    ParamSymbol a = th(), b = thA();
    for (int k = 0; k < 50; ++k) {
        Scalar s = random_scalar(rng);
        Substitution s1, s2, both;
        s1.bind(a, Scalar(Rat(2)) * Scalar::symbol(b));
        s2.bind(qsym(), Scalar::phase(b, Rat(3)));
        both.bind(a, Scalar(Rat(2)) * Scalar::symbol(b));
        both.bind(qsym(), Scalar::phase(b, Rat(3)));
        CHECK(s2.apply(s1.apply(s)) == both.apply(s));
    }
}

TEST_CASE("invertibility") {
    CHECK(Scalar::phase(th(), Rat(1, 2)).invertible());
    CHECK(Scalar::symbol(qsym(), -3).invertible());
    CHECK_FALSE(Scalar::symbol(th()).invertible());
    CHECK_FALSE((Scalar::one() + Scalar::symbol(qsym())).invertible());
    Scalar u = Scalar(GRat(Rat(0), Rat(2))) * Scalar::phase(th(), Rat(1));
    CHECK((u * u.inverse()).is_one());
}

TEST_CASE("linear forms and torus phases") {
    LinearForm f = LinearForm(th(), Rat(1, 4)) + LinearForm(thA(), Rat(-1, 2));
    CHECK(f.to_phase() == Scalar::phase(th(), Rat(1, 4)) * Scalar::phase(thA(), Rat(-1, 2)));
    CHECK((f - f).is_zero());
    CHECK((f * Rat(4)).to_phase() == Scalar::phase(th(), Rat(1)) * Scalar::phase(thA(), Rat(-2)));
}

TEST_CASE("scalar printing round trips basic shapes") {
    Scalar s = Scalar(Rat(3, 2)) + Scalar::imag_unit() * Scalar::symbol(th(), 2);
    CHECK(s.to_string() == "3/2 + i theta^2");
    CHECK(Scalar::phase(th(), Rat(1, 2)).to_string() == "q(1/2 theta)");
    CHECK(Scalar::zero().to_string() == "0");
}
