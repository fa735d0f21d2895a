#ifndef NCTWIST_SUITES_HPP
#define NCTWIST_SUITES_HPP

#include "nctwist/catalog.hpp"

namespace nct::catalog {

// ---------------------------------------------------------------------------
// Homogeneous-space embeddings into the matrix coordinate ring.

/// phi(x^{mu nu}) = a^mu_1 a^nu_2 - a^nu_1 a^mu_2 and phi(Z^mu) = a^mu_1,
/// checked on the quadric and the incidence relations.
inline Report suite_phi() {
    Report rep;
    rep.suite = "phi";
    SpaceBuild gl = build_space("gl4");
    SpaceBuild corr = build_space("corr");
    const Presentation& G = gl.pres();

    auto A = [&](int mu, int nu) {
        return NCPoly::of_gen(G.require("a" + std::to_string(mu) + std::to_string(nu)));
    };
    auto wedge = [&](int mu, int nu) {
        return A(mu, 1).concat(A(nu, 2)) - A(nu, 1).concat(A(mu, 2));
    };
    // the six quadric coordinates in terms of minors
    NCPoly s = wedge(1, 2), w = -wedge(1, 3), zt = wedge(1, 4);
    NCPoly z = -wedge(2, 3), wt = wedge(2, 4), t = wedge(3, 4);
    auto Z = [&](int mu) { return A(mu, 1); };

    check_zero(rep, "phi.1", "quadric maps to zero: st - z zt + w wt", G,
               s.concat(t) - z.concat(zt) + w.concat(wt));
    check_zero(rep, "phi.2", "incidence: zt Z3 + w Z4 - t Z1", G,
               zt.concat(Z(3)) + w.concat(Z(4)) - t.concat(Z(1)));
    check_zero(rep, "phi.3", "incidence: wt Z3 + z Z4 - t Z2", G,
               wt.concat(Z(3)) + z.concat(Z(4)) - t.concat(Z(2)));
    check_zero(rep, "phi.4", "incidence: s Z3 + w Z2 - z Z1", G,
               s.concat(Z(3)) + w.concat(Z(2)) - z.concat(Z(1)));
    check_zero(rep, "phi.5", "incidence: s Z4 - zt Z2 + wt Z1", G,
               s.concat(Z(4)) - zt.concat(Z(2)) + wt.concat(Z(1)));
    check_zero(rep, "phi.6", "zero maps to zero", G, NCPoly::zero());
    // the images also satisfy every declared relation of the source algebra
    {
        GenAssignment images;
        const Presentation& C = corr.pres();
        auto img = [&](const char* n, NCPoly v) { images[C.require(n)] = std::move(v); };
        img("s", s);
        img("t", t);
        img("z", z);
        img("zt", zt);
        img("w", w);
        img("wt", wt);
        img("Z1", Z(1));
        img("Z2", Z(2));
        img("Z3", Z(3));
        img("Z4", Z(4));
        // forms are outside the embedding; map them to zero
        for (GenId g = 0; g < static_cast<GenId>(C.generators().size()); ++g)
            if (!images.count(g)) images[g] = NCPoly::zero();
        CheckReport all = check_map(images, C, G, MapMode::LinearHom);
        rep.add("phi.7", "all incidence-algebra relations map to zero", all.all_pass());
    }
    rep.sort();
    return rep;
}

// ---------------------------------------------------------------------------
// The quadratic identity battery in the unreduced twistor-space algebra.

inline Report suite_cp3_identities() {
    Report rep;
    rep.suite = "cp3-identities";
    SpaceBuild cp3 = build_space("cp3");
    const Presentation& P = cp3.pres();
    auto poly = [&](const std::string& t) { return cp3.parse(t); };

    NCPoly X = poly("x xs"), Y = poly("y ys"), Z = poly("z zs");
    NCPoly a = poly("a"), b = poly("b"), c = poly("c"), d = poly("d");
    auto mul = [&](const NCPoly& l, const NCPoly& r) { return l.concat(r); };

    struct Item {
        const char* id;
        NCPoly lhs, rhs;
        const char* claim;
    };
    std::vector<Item> items = {
        {"id.01", X - mul(a, b), Y - (mul(a, c) - mul(b, d)), "(X-ab)(Y-(ac-bd)) = 0"},
        {"id.02", X - mul(a, b), Z - (mul(a, d) - mul(b, c)), "(X-ab)(Z-(ad-bc)) = 0"},
        {"id.03", Y - mul(a, c), X - (mul(a, b) - mul(c, d)), "(Y-ac)(X-(ab-cd)) = 0"},
        {"id.04", Y - mul(a, c), Z - (mul(a, d) - mul(b, c)), "(Y-ac)(Z-(ad-bc)) = 0"},
        {"id.05", Z - mul(a, d), X - (mul(a, b) - mul(c, d)), "(Z-ad)(X-(ab-cd)) = 0"},
        {"id.06", Z - mul(a, d), Y - (mul(a, c) - mul(b, d)), "(Z-ad)(Y-(ac-bd)) = 0"},
        {"id.07", X - mul(a, b), X - mul(b, NCPoly::unit() - a), "(X-ab)(X-b(1-a)) = 0"},
        {"id.08", Y - mul(a, c), Y - mul(c, NCPoly::unit() - a), "(Y-ac)(Y-c(1-a)) = 0"},
        {"id.09", Z - mul(a, d), Z - mul(d, NCPoly::unit() - a), "(Z-ad)(Z-d(1-a)) = 0"},
        {"id.10", X - mul(a, b), X - mul(a, NCPoly::unit() - b), "(X-ab)(X-a(1-b)) = 0"},
        {"id.11", Y - mul(a, c), Y - mul(a, NCPoly::unit() - c), "(Y-ac)(Y-a(1-c)) = 0"},
        {"id.12", Z - mul(a, d), Z - mul(a, NCPoly::unit() - d), "(Z-ad)(Z-a(1-d)) = 0"},
    };
    for (auto& it : items) check_zero(rep, it.id, it.claim, P, mul(it.lhs, it.rhs));

    // forcing in the regular form, localized where the two presentations agree
    SpaceBuild reg = build_space("cp3_regular");
    Presentation loc = adjoin_central_inverse(reg.pres(), reg.gen("a"), "ai");
    check_zero(rep, "id.13", "X = ab holds in the regular localization", loc,
               reg.gen("x").concat(reg.gen("xs")) - reg.gen("a").concat(reg.gen("b")));
    check_zero(rep, "id.14", "Y = ac holds in the regular localization", loc,
               reg.gen("y").concat(reg.gen("ys")) - reg.gen("a").concat(reg.gen("c")));
    check_zero(rep, "id.15", "Z = ad holds in the regular localization", loc,
               reg.gen("z").concat(reg.gen("zs")) - reg.gen("a").concat(reg.gen("d")));
    rep.sort();
    return rep;
}

/// Redundancy of the auxiliary generators once a is inverted.
inline Report suite_cp3_redundancy() {
    Report rep;
    rep.suite = "cp3-redundancy";
    SpaceBuild reg = build_space("cp3_regular");
    Presentation loc = adjoin_central_inverse(reg.pres(), reg.gen("a"), "ai");
    auto g = [&](const char* n) { return NCPoly::of_gen(loc.require(n)); };
    check_zero(rep, "red.1", "a^2 w* v = a^2 b u", loc,
               g("a").concat(g("a")).concat(g("ws")).concat(g("v")) -
                   g("a").concat(g("a")).concat(g("b")).concat(g("u")));
    check_zero(rep, "red.2", "a(y w* + z v*) = a(c+d)x", loc,
               g("a").concat(g("y")).concat(g("ws")) + g("a").concat(g("z")).concat(g("vs")) -
                   g("a").concat(g("c") + g("d")).concat(g("x")));
    check_zero(rep, "red.3", "a u - ys z with u defined by the localization", loc,
               g("a").concat(g("u")) - g("ys").concat(g("z")));
    rep.sort();
    return rep;
}

// ---------------------------------------------------------------------------
// The antilinear involution on the regular twistor algebra.

inline GenAssignment j_map(const Presentation& P, bool twisted) {
    auto th = ParamSymbol::declare("theta", ParamKind::RealAdditive);
    Scalar eip = Scalar::phase(th, Rat(1));
    Scalar eim = Scalar::phase(th, Rat(-1));
    if (!twisted) eip = eim = Scalar::one();
    GenAssignment J;
    auto set = [&](const char* n, NCPoly img) { J[P.require(n)] = std::move(img); };
    auto g = [&](const char* n) { return NCPoly::of_gen(P.require(n)); };
    set("a", g("b"));
    set("b", g("a"));
    set("c", NCPoly::unit() - g("a") - g("b") - g("c"));
    set("d", g("c"));
    set("x", -g("x"));
    set("xs", -g("xs"));
    set("u", -g("u"));
    set("us", -g("us"));
    set("y", g("vs") * eip);
    set("ys", g("v") * eim);
    set("v", g("ys") * eim);
    set("vs", g("y") * eip);
    set("z", -g("ws"));
    set("zs", -g("w"));
    set("w", -g("zs"));
    set("ws", -g("z"));
    return J;
}

inline Report suite_j(bool twisted, const Presentation& P) {
    Report rep;
    rep.suite = twisted ? "j-involution-twisted" : "j-involution";
    GenAssignment J = j_map(P, twisted);
    CheckReport hom = check_map(J, P, P, MapMode::AntilinearAntihom);
    rep.add("j.1", "J sends every defining relation to zero (antilinear antimap)", hom.all_pass(),
            hom.all_pass() ? "" : [&] {
                for (auto& e : hom.entries)
                    if (!e.pass) return e.label + ": " + e.detail;
                return std::string();
            }());
    // involution on generators
    bool invol = true;
    std::string bad;
    for (GenId g = 0; g < static_cast<GenId>(P.generators().size()); ++g) {
        NCPoly once = J.at(g);
        NCPoly twice = apply_map(once, J, P, MapMode::AntilinearAntihom);
        if (!P.normal_form(twice - NCPoly::of_gen(g)).is_zero()) {
            invol = false;
            bad = P.gen(g).name;
            break;
        }
    }
    rep.add("j.2", "J o J = id on the generators", invol, bad);
    // fixed points: the inclusion images of the sphere generators are J-invariant
    auto g = [&](const char* n) { return NCPoly::of_gen(P.require(n)); };
    auto th = ParamSymbol::declare("theta", ParamKind::RealAdditive);
    Scalar eip = twisted ? Scalar::phase(th, Rat(1)) : Scalar::one();
    NCPoly eta_a = g("a") + g("b");
    NCPoly eta_z = g("y") * eip + g("vs");
    NCPoly eta_w = g("w") - g("zs");
    auto jfix = [&](const char* id, const char* claim, const NCPoly& p) {
        NCPoly img = apply_map(p, J, P, MapMode::AntilinearAntihom);
        check_zero(rep, id, claim, P, img - p);
    };
    jfix("j.3", "J fixes the image of a", eta_a);
    jfix("j.4", "J fixes the image of z", eta_z);
    jfix("j.5", "J fixes the image of w", eta_w);
    // and moves a non-invariant generator
    NCPoly moved = apply_map(g("a"), J, P, MapMode::AntilinearAntihom) - g("a");
    rep.add("j.6", "J moves a alone", !P.normal_form(moved).is_zero());
    rep.sort();
    return rep;
}

inline Report suite_j_classical() {
    SpaceBuild reg = build_space("cp3_regular");
    return suite_j(false, reg.pres());
}

// ---------------------------------------------------------------------------
// The sphere-to-twistor-space inclusion.

inline Report suite_eta(bool twisted, const Presentation& S4, const Presentation& CP3) {
    Report rep;
    rep.suite = twisted ? "eta-twisted" : "eta";
    auto th = ParamSymbol::declare("theta", ParamKind::RealAdditive);
    Scalar eip = twisted ? Scalar::phase(th, Rat(1)) : Scalar::one();
    Scalar eim = eip.conj();
    auto g = [&](const char* n) { return NCPoly::of_gen(CP3.require(n)); };

    // the internal lemma: y v = e^{-i theta} w z, by летters against the trace
    NCPoly yv = g("y").concat(g("v"));
    NCPoly wz = g("w").concat(g("z")) * eim;
    const char* letters[4] = {"a", "b", "c", "d"};
    bool lemma = true;
    std::string bad;
    for (auto* L : letters) {
        NCPoly diff = g(L).concat(yv) - g(L).concat(wz);
        NCPoly nf = CP3.normal_form(diff);
        if (nf.is_zero()) continue;
        nf = CP3.normal_form(diff, nullptr, Strategy::RightmostReversed);
        if (!nf.is_zero()) {
            lemma = false;
            bad = std::string(L) + ": " + nf.to_string(CP3);
            break;
        }
    }
    rep.add("eta.1", "letterwise derivation of y v = q w z", lemma, bad);
    check_zero(rep, "eta.2", "summed derivation (a+b+c+d)(yv - q wz) = 0", CP3,
               (g("a") + g("b") + g("c") + g("d")).concat(yv - wz));

    // the inclusion itself
    GenAssignment eta;
    eta[S4.require("a")] = g("a") + g("b");
    eta[S4.require("z")] = g("y") * eip + g("vs");
    eta[S4.require("zs")] = g("ys") * eim + g("v");
    eta[S4.require("w")] = g("w") - g("zs");
    eta[S4.require("ws")] = g("ws") - g("z");
    CheckReport hom = check_map(eta, S4, CP3, MapMode::LinearHom);
    rep.add("eta.3", "every sphere relation maps to zero", hom.all_pass(), hom.all_pass() ? "" : [&] {
        for (auto& e : hom.entries)
            if (!e.pass) return e.label + ": " + e.detail;
        return std::string();
    }());
    // the sphere relation image, written out as in the proof
    NCPoly lhs = eta.at(S4.require("zs")).concat(eta.at(S4.require("z"))) +
                 eta.at(S4.require("ws")).concat(eta.at(S4.require("w")));
    NCPoly rhs = eta.at(S4.require("a")).concat(NCPoly::unit() - eta.at(S4.require("a")));
    check_zero(rep, "eta.4", "image of z*z + w*w - a(1-a)", CP3, lhs - rhs);
    rep.sort();
    return rep;
}

inline Report suite_eta_classical() {
    SpaceBuild s4 = build_space("s4_twistor");
    SpaceBuild reg = build_space("cp3_regular");
    return suite_eta(false, s4.pres(), reg.pres());
}

// ---------------------------------------------------------------------------
// Mutual reducibility of the two space-time presentations.

inline Report suite_cm_forms() {
    Report rep;
    rep.suite = "cm-forms";
    SpaceBuild cart = build_space("cmhash_cartesian");
    SpaceBuild twi = build_space("cmhash_twistor");
    const Presentation& C = cart.pres();
    const Presentation& T = twi.pres();
    Scalar half(Rat(1, 2));
    Scalar ihalf(GRat(Rat(0), Rat(1, 2)));
    auto tg = [&](const char* n) { return NCPoly::of_gen(T.require(n)); };
    auto cg = [&](const char* n) { return NCPoly::of_gen(C.require(n)); };

    GenAssignment to_twistor;
    auto ct = [&](const char* n, NCPoly img) { to_twistor[C.require(n)] = std::move(img); };
    ct("a", tg("a"));
    ct("al1", (tg("al") + tg("als")) * half);
    ct("al2", (tg("al") - tg("als")) * ihalf);
    ct("al3", tg("a3"));
    ct("de1", (tg("de") + tg("des")) * half);
    ct("de2", (tg("de") - tg("des")) * ihalf);
    ct("de3", tg("d3"));
    ct("t", (tg("z") + tg("zt")) * half);
    ct("ts", (tg("zs") + tg("zts")) * half);
    ct("x1", (tg("wt") + tg("w")) * (-ihalf));
    ct("x1s", (tg("wts") + tg("ws")) * ihalf);
    ct("x2", (tg("wt") - tg("w")) * half);
    ct("x2s", (tg("wts") - tg("ws")) * half);
    ct("x3", (tg("z") - tg("zt")) * (-ihalf));
    ct("x3s", (tg("zs") - tg("zts")) * ihalf);
    CheckReport one = check_map(to_twistor, C, T, MapMode::LinearHom);
    rep.add("forms.1", "cartesian relations map to zero in the block coordinates", one.all_pass(),
            one.all_pass() ? "" : [&] {
                for (auto& e : one.entries)
                    if (!e.pass) return e.label + ": " + e.detail;
                return std::string();
            }());

    Scalar i = Scalar::imag_unit();
    GenAssignment to_cart;
    auto tc = [&](const char* n, NCPoly img) { to_cart[T.require(n)] = std::move(img); };
    tc("a", cg("a"));
    tc("a3", cg("al3"));
    tc("d3", cg("de3"));
    tc("al", cg("al1") - cg("al2") * i);
    tc("als", cg("al1") + cg("al2") * i);
    tc("de", cg("de1") - cg("de2") * i);
    tc("des", cg("de1") + cg("de2") * i);
    tc("z", cg("t") + cg("x3") * i);
    tc("zs", cg("ts") - cg("x3s") * i);
    tc("zt", cg("t") - cg("x3") * i);
    tc("zts", cg("ts") + cg("x3s") * i);
    tc("w", cg("x1") * i - cg("x2"));
    tc("ws", cg("x1s") * (-i) - cg("x2s"));
    tc("wt", cg("x1") * i + cg("x2"));
    tc("wts", cg("x1s") * (-i) + cg("x2s"));
    CheckReport two = check_map(to_cart, T, C, MapMode::LinearHom);
    rep.add("forms.2", "block relations map to zero in cartesian coordinates", two.all_pass(),
            two.all_pass() ? "" : [&] {
                for (auto& e : two.entries)
                    if (!e.pass) return e.label + ": " + e.detail;
                return std::string();
            }());
    // round trip on generators
    bool rt = true;
    for (GenId gg = 0; gg < static_cast<GenId>(T.generators().size()); ++gg) {
        NCPoly back = apply_map(to_cart.at(gg), to_twistor, T, MapMode::LinearHom);
        if (!T.normal_form(back - NCPoly::of_gen(gg)).is_zero()) rt = false;
    }
    rep.add("forms.3", "round trip is the identity on the block generators", rt);
    rep.sort();
    return rep;
}

}  // namespace nct::catalog

#endif
