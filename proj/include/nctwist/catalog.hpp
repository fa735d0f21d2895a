#ifndef NCTWIST_CATALOG_HPP
#define NCTWIST_CATALOG_HPP

#include "nctwist/report.hpp"
#include "nctwist/twist.hpp"

#include <cstdlib>
#include <memory>

namespace nct::catalog {

inline std::string dir() {
    if (const char* env = std::getenv("NCTWIST_CATALOG_DIR")) return env;
#ifdef NCTWIST_CATALOG_DIR
    return NCTWIST_CATALOG_DIR;
#else
    return "catalog";
#endif
}

inline dsl::SpecDocument load_doc(const std::string& id) {
    return dsl::parse_file(dir() + "/" + id + ".alg");
}

/// Permute the generators of a document; different generator orders give
/// differently oriented rule sets for the same algebra.
inline dsl::SpecDocument reorder_document(const dsl::SpecDocument& doc,
                                          const std::vector<std::string>& order) {
    if (order.size() != doc.gens.size())
        throw std::invalid_argument("reorder: generator list size mismatch");
    std::vector<GenId> old_of_new(order.size());
    std::map<GenId, GenId> new_of_old;
    for (size_t k = 0; k < order.size(); ++k) {
        auto g = doc.find_gen(order[k]);
        if (!g) throw std::invalid_argument("reorder: unknown generator " + order[k]);
        old_of_new[k] = *g;
        new_of_old[*g] = static_cast<GenId>(k);
    }
    auto remap = [&](const NCPoly& p) {
        NCPoly out;
        for (auto& [w, c] : p.terms()) {
            Word nw;
            for (char ch : w)
                nw.push_back(static_cast<char>(new_of_old.at(static_cast<GenId>(static_cast<unsigned char>(ch)))));
            out.add(nw, c);
        }
        return out;
    };
    dsl::SpecDocument out = doc;
    out.gens.clear();
    for (size_t k = 0; k < order.size(); ++k) out.gens.push_back(doc.gens[static_cast<size_t>(old_of_new[k])]);
    for (auto& r : out.relations) {
        r.left = remap(r.left);
        r.right = remap(r.right);
    }
    for (auto& r : out.commutation) {
        r.left = remap(r.left);
        r.right = remap(r.right);
    }
    for (auto& [g, img] : out.dmap) img = remap(img);
    for (auto& m : out.matrices)
        for (auto& row : m.rows)
            for (auto& e : row) e = remap(e);
    for (auto& c : out.checks) c.trace = remap(c.trace);
    return out;
}

/// A built catalog space: presentation (with calculus when declared), its
/// distinguished matrices, and the structural self-checks.
struct SpaceBuild {
    std::string id;
    dsl::SpecDocument doc;
    std::shared_ptr<DGAPresentation> dga;
    std::map<std::string, NCMatrix> matrices;
    CheckReport self;

    const Presentation& pres() const { return dga->pres; }
    bool has_calculus() const { return !doc.dmap.empty(); }

    NCPoly gen(const std::string& name) const { return NCPoly::of_gen(pres().require(name)); }
    NCPoly parse(const std::string& text) const;
    const NCMatrix& matrix(const std::string& name) const {
        auto it = matrices.find(name);
        if (it == matrices.end()) throw std::invalid_argument("no matrix '" + name + "' in " + id);
        return it->second;
    }
};

inline NCMatrix doc_matrix(const dsl::MatrixDecl& m, const Presentation& pres) {
    NCMatrix out(&pres, m.rows.size(), m.rows.front().size());
    for (size_t i = 0; i < m.rows.size(); ++i)
        for (size_t j = 0; j < m.rows[i].size(); ++j) out(i, j) = pres.normal_form(m.rows[i][j]);
    return out;
}

inline SpaceBuild build_from_document(const std::string& id, const dsl::SpecDocument& doc) {
    SpaceBuild out;
    out.id = id;
    out.doc = doc;
    out.dga = std::make_shared<DGAPresentation>();
    if (!doc.dmap.empty()) {
        *out.dga = dga_from_document(doc);
    } else {
        out.dga->pres = dsl::build_presentation(doc);
        out.dga->dmap.assign(out.dga->pres.generators().size(), NCPoly::zero());
    }
    for (auto& m : doc.matrices) out.matrices.emplace(m.name, doc_matrix(m, out.dga->pres));
    for (auto& c : doc.checks) {
        switch (c.kind) {
            case dsl::CheckDirective::Projector:
                out.self.merge(projector_report(out.matrix(c.matrix),
                                                out.pres().normal_form(c.trace), id + "." + c.matrix));
                break;
            case dsl::CheckDirective::DSquared:
                out.self.merge(out.dga->check_d_squared());
                break;
            case dsl::CheckDirective::StarClosure:
                out.self.merge(out.pres().check_star_closure());
                break;
        }
    }
    return out;
}

inline SpaceBuild build_space(const std::string& id) { return build_from_document(id, load_doc(id)); }

inline NCPoly SpaceBuild::parse(const std::string& text) const {
    // Borrow the expression grammar: wrap the text in a one-relation document.
    std::string src = "version 1\nalgebra probe {\n";
    src += "  params {\n";
    for (auto& [n, k] : doc.params)
        src += "    " + n + std::string(k == ParamKind::RealAdditive ? " real ;" : " phase ;") + "\n";
    src += "  }\n  generators {\n";
    for (auto& g : doc.gens) src += "    " + g.name + " ;\n";
    src += "  }\n  relations { " + text + " = 0 ; }\n}\n";
    dsl::SpecDocument probe = dsl::parse_algebra_spec(src);
    return pres().normal_form(probe.relations.at(0).left);
}

// ---------------------------------------------------------------------------
// Shared suite helpers.

inline void check_zero(Report& rep, const std::string& id, const std::string& claim,
                       const Presentation& pres, const NCPoly& p) {
    Stopwatch sw;
    NCPoly nf = pres.normal_form(p);
    rep.add(id, claim, nf.is_zero(), nf.is_zero() ? "" : nf.to_string(pres), sw.ms());
}

/// Reduce along an explicit chain of equal elements; consecutive differences
/// may reduce under either deterministic strategy.
inline void check_chain(Report& rep, const std::string& id, const std::string& claim,
                        const Presentation& pres, const std::vector<NCPoly>& chain) {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        NCPoly diff = chain[k] - chain[k + 1];
        NCPoly a = pres.normal_form(diff);
        if (a.is_zero()) continue;
        NCPoly b = pres.normal_form(diff, nullptr, Strategy::RightmostReversed);
        if (b.is_zero()) continue;
        ok = false;
        detail = "step " + std::to_string(k) + ": " + a.to_string(pres);
        break;
    }
    rep.add(id, claim, ok, detail, sw.ms());
}

}  // namespace nct::catalog

#endif
