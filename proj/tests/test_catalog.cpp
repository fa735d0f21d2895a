#include "nctwist/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nct;
using namespace nct::catalog;

namespace {

void dump(const Report& r) {
    if (!r.all_pass()) emit_human(r, std::cerr);
}

}  // namespace

TEST_CASE("all classical catalog spaces build and self-check") {
    for (const char* id : {"cp1", "cp2", "cp3", "cp3_regular", "gl4", "twistor", "corr",
                           "cm_quadric", "s4_twistor", "s4_cartesian", "cmhash_twistor",
                           "cmhash_cartesian", "corr_flag"}) {
        INFO(id);
        SpaceBuild b = build_space(id);
        for (auto& e : b.self.entries) {
            INFO(e.label << " " << e.detail);
            CHECK(e.pass);
        }
    }
}

TEST_CASE("regular twistor algebra passes the projector check in a reordered chart") {
    dsl::SpecDocument doc = load_doc("cp3_regular");
    dsl::SpecDocument re = reorder_document(
        doc, {"a", "b", "c", "d", "x", "xs", "y", "ys", "z", "zs", "u", "us", "v", "vs", "w", "ws"});
    SpaceBuild b = build_from_document("cp3_regular_check", re);
    CheckReport pr = projector_report(b.matrix("Q"), NCPoly::unit(), "Q");
    for (auto& e : pr.entries) {
        INFO(e.label << " " << e.detail);
        CHECK(e.pass);
    }
    // the two orientations present the same algebra
    SpaceBuild orig = build_space("cp3_regular");
    dsl::SpecDocument back = reorder_document(re, {"x", "xs", "z", "zs", "y", "ys", "u", "us", "v",
                                                   "vs", "w", "ws", "a", "b", "c", "d"});
    SpaceBuild round = build_from_document("cp3_regular_back", back);
    CHECK(mutual_reduction(orig.pres(), round.pres()).all_pass());
}

TEST_CASE("phi embedding suite") {
    Report r = suite_phi();
    dump(r);
    CHECK(r.all_pass());
}

TEST_CASE("cp3 identity battery") {
    Report r = suite_cp3_identities();
    dump(r);
    CHECK(r.all_pass());
}

TEST_CASE("cp3 redundancy") {
    Report r = suite_cp3_redundancy();
    dump(r);
    CHECK(r.all_pass());
}

TEST_CASE("classical J involution") {
    Report r = suite_j_classical();
    dump(r);
    CHECK(r.all_pass());
}

TEST_CASE("classical eta inclusion") {
    Report r = suite_eta_classical();
    dump(r);
    CHECK(r.all_pass());
}

TEST_CASE("space-time presentations are mutually reducible") {
    Report r = suite_cm_forms();
    dump(r);
    CHECK(r.all_pass());
}
