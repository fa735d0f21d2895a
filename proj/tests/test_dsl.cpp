#include "nctwist/dsl.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nct;
using namespace nct::dsl;

namespace {

const char* kQuantumDisk = R"(
version 1
# smallest projective line with one deformation parameter
algebra qdisk {
  params { theta real ; }
  options { commutative ; }
  generators {
    a self central ;
    x star xs ;
  }
  relations {
    x xs = a - a^2 ;
  }
  commutation {
    x xs = q(2 theta) xs x ;
  }
}
)";

}  // namespace

TEST_CASE("parse and build a small declaration") {
    SpecDocument doc = parse_algebra_spec(kQuantumDisk);
    CHECK(doc.name == "qdisk");
    CHECK(doc.params.size() == 1);
    CHECK(doc.gens.size() == 3);
    CHECK(doc.gens[1].star == "xs");
    Presentation p = build_presentation(doc);
    GenId x = p.require("x"), xs = p.require("xs"), a = p.require("a");
    // declared commutation overrides plain commutativity
    NCPoly nf = p.normal_form(NCPoly::of_word(word_of({xs, x})));
    auto th = *ParamSymbol::lookup("theta");
    CHECK(nf == p.normal_form(NCPoly::of_word(word_of({x, xs}), Scalar::phase(th, Rat(-2)))));
    // relation fires
    CHECK(p.reduces_to_zero(p.mul(NCPoly::of_gen(x), NCPoly::of_gen(xs)) -
                            (NCPoly::of_gen(a) - p.mul(NCPoly::of_gen(a), NCPoly::of_gen(a)))));
    // star structure: star(x) = xs
    CHECK(p.star(NCPoly::of_gen(x)) == NCPoly::of_gen(xs));
}

TEST_CASE("print then parse is the identity on documents") {
    SpecDocument doc = parse_algebra_spec(kQuantumDisk);
    std::string printed = print_document(doc);
    SpecDocument again = parse_algebra_spec(printed);
    CHECK(print_document(again) == printed);
    CHECK(again.name == doc.name);
    CHECK(again.gens.size() == doc.gens.size());
    CHECK(again.relations.size() == doc.relations.size());
    for (size_t k = 0; k < doc.relations.size(); ++k) {
        CHECK(again.relations[k].left - again.relations[k].right ==
              doc.relations[k].left - doc.relations[k].right);
    }
}

TEST_CASE("diagnostics carry positions") {
    try {
        parse_algebra_spec("");
        FAIL("expected a diagnostic");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("version") != std::string::npos);
    }

    const char* dup = R"(
version 1
algebra bad {
  generators { x ; x ; }
}
)";
    try {
        parse_algebra_spec(dup);
        FAIL("expected a diagnostic");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("already declared at line 4") != std::string::npos);
        CHECK(e.line == 4);
    }

    CHECK_THROWS_AS(parse_algebra_spec("version 2\nalgebra x { }"), ParseError);
    CHECK_THROWS_AS(parse_algebra_spec("version 1\nalgebra x { relations { y = 1 ; } }"),
                    ParseError);
}

TEST_CASE("star pairs with phases") {
    const char* src = R"(
version 1
algebra ph {
  params { theta real ; }
  generators { z star zt phase q(1/2 theta) ; }
}
)";
    SpecDocument doc = parse_algebra_spec(src);
    Presentation p = build_presentation(doc);
    GenId z = p.require("z"), zt = p.require("zt");
    auto th = *ParamSymbol::lookup("theta");
    // star(z) = e^{i theta/2} zt, and star is involutive
    CHECK(p.star(NCPoly::of_gen(z)) == NCPoly::of_gen(zt, Scalar::phase(th, Rat(1, 2))));
    CHECK(p.star(p.star(NCPoly::of_gen(z))) == NCPoly::of_gen(z));
}

TEST_CASE("matrices and checks blocks parse") {
    const char* src = R"(
version 1
algebra withmat {
  generators { a self ; z star zs ; }
  options { commutative ; }
  relations { z zs = a - a^2 ; }
  matrices { e = [[ a , z ],[ zs , 1 - a ]] ; }
  checks { projector e trace 1 ; starclosure ; }
}
)";
    SpecDocument doc = parse_algebra_spec(src);
    REQUIRE(doc.matrices.size() == 1);
    CHECK(doc.matrices[0].rows.size() == 2);
    CHECK(doc.checks.size() == 2);
    std::string printed = print_document(doc);
    SpecDocument again = parse_algebra_spec(printed);
    CHECK(print_document(again) == printed);
}

TEST_CASE("torus weights and calculus entries") {
    const char* src = R"(
version 1
algebra cal {
  generators {
    t self central cstar 1 torus (0,0,1) ;
    dt form 1 central cstar 1 ;
  }
  calculus { top 2 ; d t = dt ; }
}
)";
    SpecDocument doc = parse_algebra_spec(src);
    CHECK(doc.top == 2);
    REQUIRE(doc.dmap.size() == 1);
    Presentation p = build_presentation(doc);
    CHECK(p.gen(p.require("t")).torus_weight == std::vector<int>{0, 0, 1});
    CHECK(p.gen(p.require("t")).cstar_weight == 1);
    std::string printed = print_document(doc);
    CHECK(print_document(parse_algebra_spec(printed)) == printed);
}
