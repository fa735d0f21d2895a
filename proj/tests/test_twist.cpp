#include "nctwist/twist.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nct;

namespace {

ParamSymbol sym(const char* n) { return ParamSymbol::declare(n, ParamKind::RealAdditive); }

ThetaProfile generic_profile() {
    return {LinearForm(sym("thA")), LinearForm(sym("thB")), LinearForm(sym("th"))};
}

/// Independent oracle: solve the defining linear system (three vanishing
/// row sums plus the three combinations) for the six upper entries.
std::array<std::array<Rat, 3>, 6> oracle_coefficients() {
    // unknowns ordered th12 th13 th14 th23 th24 th34
    std::vector<std::vector<Rat>> A = {
        {Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)},    // row 1 sums to zero
        {Rat(-1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(0)},   // row 2
        {Rat(0), Rat(-1), Rat(0), Rat(-1), Rat(0), Rat(1)},  // row 3
        {Rat(1), Rat(-1), Rat(0), Rat(1), Rat(0), Rat(0)},   // theta_A
        {Rat(0), Rat(0), Rat(0), Rat(1), Rat(-1), Rat(1)},   // theta_B
        {Rat(0), Rat(1), Rat(-1), Rat(-1), Rat(1), Rat(0)},  // theta
    };
    std::array<std::array<Rat, 3>, 6> out{};
    for (int rhs = 0; rhs < 3; ++rhs) {
        std::vector<Rat> b(6, Rat(0));
        b[static_cast<size_t>(3 + rhs)] = Rat(1);
        auto sol = solve_rational_system(A, b);
        for (int k = 0; k < 6; ++k)
            out[static_cast<size_t>(k)][static_cast<size_t>(rhs)] = sol[static_cast<size_t>(k)];
    }
    return out;
}

}  // namespace

TEST_CASE("torus cocycle invariants") {
    // rows must sum to zero
    std::vector<std::vector<LinearForm>> bad(4, std::vector<LinearForm>(4));
    bad[0][1] = LinearForm(sym("th"));
    CHECK_THROWS_AS(TorusCocycle(4, bad), std::invalid_argument);
    TorusCocycle c = lemma_convert(generic_profile());
    CHECK(c.antisymmetric());
}

TEST_CASE("parameter conversion matches the linear-system oracle") {
    auto coeffs = oracle_coefficients();
    TorusCocycle c = lemma_convert(generic_profile());
    LinearForm thA(sym("thA")), thB(sym("thB")), th(sym("th"));
    std::array<std::pair<int, int>, 6> slots{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (size_t k = 0; k < 6; ++k) {
        LinearForm expect = thA * coeffs[k][0] + thB * coeffs[k][1] + th * coeffs[k][2];
        CHECK(c.entry(static_cast<size_t>(slots[k].first), static_cast<size_t>(slots[k].second)) ==
              expect);
    }
    // round trip through the extraction
    ThetaProfile back = lemma_extract(c);
    CHECK(back.theta_A == thA);
    CHECK(back.theta_B == thB);
    CHECK(back.theta == th);
    // all-zero profile gives the zero matrix
    TorusCocycle z = lemma_convert({LinearForm(), LinearForm(), LinearForm()});
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(z.entry(i, j).is_zero());
}

TEST_CASE("one-parameter profile values") {
    // thA = thB = -th/2
    LinearForm th(sym("th"));
    ThetaProfile p{-(th * Rat(1, 2)), -(th * Rat(1, 2)), th};
    TorusCocycle c = lemma_convert(p);
    CHECK(c.entry(0, 1).is_zero());
    CHECK(c.entry(2, 3).is_zero());
    CHECK(c.entry(0, 2) == th * Rat(1, 4));
    CHECK(c.entry(1, 3) == th * Rat(1, 4));
    CHECK(c.entry(0, 3) == -(th * Rat(1, 4)));
    CHECK(c.entry(1, 2) == -(th * Rat(1, 4)));
}

namespace {

/// Two projector-style generators with flag-variety gradings.
Presentation graded_pair() {
    Presentation p("graded");
    Generator x;
    x.name = "x";
    x.star_partner = -1;
    x.torus_weight = {1, -1, 0, 0};
    Generator z = x;
    z.name = "z";
    z.torus_weight = {1, 0, 0, -1};
    p.add_generator(x);
    p.add_generator(z);
    p.build();
    return p;
}

}  // namespace

TEST_CASE("torus twisted product reproduces entrywise phases") {
    LinearForm th(sym("th"));
    ThetaProfile prof{-(th * Rat(1, 2)), -(th * Rat(1, 2)), th};
    TorusCocycle c = lemma_convert(prof);
    Presentation p = graded_pair();
    GenId x = p.require("x"), z = p.require("z");
    NCPoly xz = torus_twist_product(NCPoly::of_gen(x), NCPoly::of_gen(z), c, p);
    NCPoly zx = torus_twist_product(NCPoly::of_gen(z), NCPoly::of_gen(x), c, p);
    // x z = e^{i th} z x for this grading and profile
    Scalar lhs_phase = xz.terms().begin()->second;
    Scalar rhs_phase = zx.terms().begin()->second;
    CHECK(lhs_phase * rhs_phase.inverse() == Scalar::phase(sym("th"), Rat(1)));
    // zero cocycle gives the plain product
    TorusCocycle z0 = TorusCocycle::zero(4);
    CHECK(torus_twist_product(NCPoly::of_gen(x), NCPoly::of_gen(z), z0, p) ==
          NCPoly::of_word(word_of({x, z})));
    // bullet associativity on sampled words
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 1), len(0, 3);
    for (int s = 0; s < 100; ++s) {
        Word a, b, d;
        for (int i = len(rng); i-- > 0;) a.push_back(static_cast<char>(pick(rng)));
        for (int i = len(rng); i-- > 0;) b.push_back(static_cast<char>(pick(rng)));
        for (int i = len(rng); i-- > 0;) d.push_back(static_cast<char>(pick(rng)));
        NCPoly pa = NCPoly::of_word(a), pb = NCPoly::of_word(b), pd = NCPoly::of_word(d);
        CHECK(torus_twist_product(torus_twist_product(pa, pb, c, p), pd, c, p) ==
              torus_twist_product(pa, torus_twist_product(pb, pd, c, p), c, p));
    }
}

TEST_CASE("hat transform of the identity is the identity") {
    TorusCocycle c = lemma_convert(generic_profile());
    Presentation p = graded_pair();
    NCMatrix id = NCMatrix::identity(&p, 4);
    CHECK(hat_transform(id, c) == id);
    // zero cocycle: hat is the identity map on any matrix
    NCMatrix m(&p, 4, 4);
    m(0, 1) = NCPoly::of_gen(p.require("x"));
    CHECK(hat_transform(m, TorusCocycle::zero(4)) == m);
}

// ---------------------------------------------------------------------------

namespace {

/// 16 translation-block parameters theta^{AB}_{A'B'}, A,B in {1,2} and
/// A',B' in {3,4}; all other entries vanish.
FourIndex generic_theta() {
    FourIndex th;
    for (int A = 1; A <= 2; ++A)
        for (int B = 1; B <= 2; ++B)
            for (int Ap = 3; Ap <= 4; ++Ap)
                for (int Bp = 3; Bp <= 4; ++Bp) {
                    std::string name = "t" + std::to_string(A) + std::to_string(B) + "_" +
                                       std::to_string(Ap) + std::to_string(Bp);
                    th.at(A, B, Ap, Bp) = Scalar::symbol(sym(name.c_str()));
                }
    return th;
}

/// Homogeneous twistor coordinates, ordered so the undeformed directions
/// come first.
Presentation twistor_free() {
    Presentation p("Tfree");
    for (const char* n : {"Z3", "Z4", "Z1", "Z2"}) {
        Generator g;
        g.name = n;
        g.star_partner = -1;
        p.add_generator(g);
    }
    // commutative
    for (GenId a = 0; a < 4; ++a)
        for (GenId b = 0; b < a; ++b)
            p.add_rule(word_of({a, b}), NCPoly::of_word(word_of({b, a})));
    p.build();
    return p;
}

CoactionMap twistor_coactions(const Presentation& p) {
    CoactionMap co;
    auto zgen = [&p](int mu) { return p.require(std::string("Z") + std::to_string(mu)); };
    for (int mu = 1; mu <= 4; ++mu) {
        Coaction c;
        c.uppers = {mu};
        c.resolve = [zgen](const std::vector<int>& idx) { return NCPoly::of_gen(zgen(idx[0])); };
        co[zgen(mu)] = c;
    }
    return co;
}

Scalar th_sym(int A, int B, int Ap, int Bp) {
    std::string name = "t" + std::to_string(A) + std::to_string(B) + "_" + std::to_string(Ap) +
                       std::to_string(Bp);
    return Scalar::symbol(sym(name.c_str()));
}

}  // namespace

TEST_CASE("bicharacter twist of the twistor coordinates") {
    FMatrixCocycle F(generic_theta());
    Presentation p = twistor_free();
    CoactionMap co = twistor_coactions(p);
    auto Z = [&](int mu) { return NCPoly::of_gen(p.require("Z" + std::to_string(mu))); };
    Scalar half_i(GRat(Rat(0), Rat(1, 2)));

    // Z^mu . Z^nu = Z^mu Z^nu + (i/2) theta^{mu nu}_{ab} Z^a Z^b
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) {
            NCPoly got = fmatrix_twist_product(Z(mu), Z(nu), F, co, p);
            NCPoly expect = Z(mu).concat(Z(nu));
            for (int a = 3; a <= 4; ++a)
                for (int b = 3; b <= 4; ++b)
                    if (mu <= 2 && nu <= 2)
                        expect += Z(a).concat(Z(b)) * (half_i * th_sym(mu, nu, a, b));
            CHECK(p.normal_form(got - expect).is_zero());
            // products with Z3, Z4 are undeformed
            if (mu >= 3 || nu >= 3) CHECK(p.normal_form(got - Z(mu).concat(Z(nu))).is_zero());
        }

    // [Z1, Z2] = i(th-^{12}_{34} + th-^{12}_{43}) Z3 Z4 + i th-^{12}_{33} Z3 Z3
    //          + i th-^{12}_{44} Z4 Z4
    FourIndex tm = theta_minus(F.theta());
    NCPoly comm = fmatrix_twist_product(Z(1), Z(2), F, co, p) -
                  fmatrix_twist_product(Z(2), Z(1), F, co, p);
    Scalar i = Scalar::imag_unit();
    NCPoly expect = Z(3).concat(Z(4)) * (i * (tm.at(1, 2, 3, 4) + tm.at(1, 2, 4, 3))) +
                    Z(3).concat(Z(3)) * (i * tm.at(1, 2, 3, 3)) +
                    Z(4).concat(Z(4)) * (i * tm.at(1, 2, 4, 4));
    CHECK(p.normal_form(comm - expect).is_zero());
}

TEST_CASE("theta minus") {
    FourIndex sym4;
    sym4.at(1, 2, 3, 4) = Scalar(Rat(5));
    sym4.at(2, 1, 4, 3) = Scalar(Rat(5));  // symmetric under the pairing
    FourIndex tm = theta_minus(sym4);
    CHECK(tm.at(1, 2, 3, 4).is_zero());
    // antisymmetric input is fixed
    FourIndex anti;
    anti.at(1, 2, 3, 4) = Scalar(Rat(7));
    anti.at(2, 1, 4, 3) = Scalar(Rat(-7));
    FourIndex tm2 = theta_minus(anti);
    CHECK(tm2.at(1, 2, 3, 4) == Scalar(Rat(7)));
    CHECK(tm2.at(2, 1, 4, 3) == Scalar(Rat(-7)));
}

TEST_CASE("R matrix") {
    FMatrixCocycle F(generic_theta());
    FourIndex R = rmatrix_build(F);
    FourIndex tm = theta_minus(F.theta());
    Scalar i = Scalar::imag_unit();
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) {
                    Scalar expect = (m == a && n == b) ? Scalar::one() : Scalar::zero();
                    expect -= i * tm.at(m, n, a, b);
                    CHECK(R.at(m, n, a, b) == expect);
                }
    // cotriangularity: R R_21 = id
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int g = 1; g <= 4; ++g)
                for (int d = 1; d <= 4; ++d) {
                    Scalar acc;
                    for (int a = 1; a <= 4; ++a)
                        for (int b = 1; b <= 4; ++b) acc += R.at(m, n, a, b) * R.at(b, a, d, g);
                    Scalar expect = (m == g && n == d) ? Scalar::one() : Scalar::zero();
                    CHECK(acc == expect);
                }
    // zero parameters: R is the identity
    FMatrixCocycle F0{FourIndex{}};
    FourIndex R0 = rmatrix_build(F0);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b)
                    CHECK(R0.at(m, n, a, b) ==
                          ((m == a && n == b) ? Scalar::one() : Scalar::zero()));
}

TEST_CASE("U functional is trivial for the translation cocycle") {
    FMatrixCocycle F(generic_theta());
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(F.U(m, n) == (m == n ? Scalar::one() : Scalar::zero()));
}

TEST_CASE("twisting a presentation transports its rules") {
    LinearForm th(sym("th"));
    ThetaProfile prof{-(th * Rat(1, 2)), -(th * Rat(1, 2)), th};
    TorusCocycle c = lemma_convert(prof);
    Presentation p = graded_pair();
    // classical commutativity x z = z x
    Presentation classical("pair");
    {
        Generator x = p.gen(p.require("x")), z = p.gen(p.require("z"));
        classical.add_generator(x);
        classical.add_generator(z);
        classical.add_rule(word_of({1, 0}), NCPoly::of_word(word_of({0, 1})));
        classical.build();
    }
    Presentation tw = twist_presentation_torus(classical, c, "pair_F");
    REQUIRE(tw.rules().size() == 1);
    // the twisted rule is z x -> e^{-i th} x z
    NCPoly nf = tw.normal_form(NCPoly::of_word(word_of({1, 0})));
    CHECK(nf == NCPoly::of_word(word_of({0, 1}), Scalar::phase(sym("th"), Rat(-1))));
    // zero cocycle reproduces the classical presentation
    Presentation tw0 = twist_presentation_torus(classical, TorusCocycle::zero(4), "pair_0");
    CHECK(mutual_reduction(tw0, classical).all_pass());
}

TEST_CASE("fmatrix twist of the free twistor algebra as a presentation") {
    FMatrixCocycle F(generic_theta());
    Presentation p = twistor_free();
    CoactionMap co = twistor_coactions(p);
    Presentation tw = twist_presentation_fmatrix(p, F, co, "T_F");
    // displayed commutator: reduce [Z1,Z2] minus the stated combination
    FourIndex tm = theta_minus(F.theta());
    auto Z = [&](int mu) { return NCPoly::of_gen(tw.require("Z" + std::to_string(mu))); };
    Scalar i = Scalar::imag_unit();
    NCPoly rel = Z(1).concat(Z(2)) - Z(2).concat(Z(1)) -
                 Z(3).concat(Z(4)) * (i * (tm.at(1, 2, 3, 4) + tm.at(1, 2, 4, 3))) -
                 Z(3).concat(Z(3)) * (i * tm.at(1, 2, 3, 3)) -
                 Z(4).concat(Z(4)) * (i * tm.at(1, 2, 4, 4));
    CHECK(tw.reduces_to_zero(rel));
    // Z3, Z4 stay central
    CHECK(tw.reduces_to_zero(Z(3).concat(Z(1)) - Z(1).concat(Z(3))));
    CHECK(tw.reduces_to_zero(Z(4).concat(Z(2)) - Z(2).concat(Z(4))));
}
