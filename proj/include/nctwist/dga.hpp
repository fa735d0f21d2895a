#ifndef NCTWIST_DGA_HPP
#define NCTWIST_DGA_HPP

#include "nctwist/dsl.hpp"
#include "nctwist/linalg.hpp"

namespace nct {

/// Differential graded extension of a presentation. Form generators are
/// ordinary generators of positive form degree; the differential is stored
/// as one image polynomial per generator and extended by the graded Leibniz
/// rule. The rule set contains the differentials of all base relations, so
/// reduction in the form algebra is compatible with d.
class DGAPresentation {
public:
    Presentation pres;
    std::vector<NCPoly> dmap;  // indexed by GenId; zero for top forms

    const Presentation& algebra() const { return pres; }

    /// Graded Leibniz expansion without reduction.
    NCPoly d_raw(const NCPoly& p) const {
        NCPoly out;
        for (auto& [w, c] : p.terms()) {
            int sign_deg = 0;
            for (size_t i = 0; i < w.size(); ++i) {
                GenId g = static_cast<GenId>(static_cast<unsigned char>(w[i]));
                const NCPoly& dg = dmap.at(static_cast<size_t>(g));
                if (!dg.is_zero()) {
                    Scalar coeff = (sign_deg % 2) ? -c : c;
                    NCPoly piece = NCPoly::of_word(w.substr(0, i), coeff).concat(dg);
                    piece = piece.concat(NCPoly::of_word(w.substr(i + 1)));
                    out += piece;
                }
                sign_deg += pres.gen(g).form_degree;
            }
        }
        return out;
    }

    NCPoly d(const NCPoly& p, ReductionTrace* trace = nullptr) const {
        return pres.normal_form(d_raw(p), trace);
    }

    /// d(d(g)) = 0 for every generator and d of every rule reduces to zero:
    /// the calculus is well-defined on the quotient.
    CheckReport check_d_squared() const {
        CheckReport rep;
        for (GenId g = 0; g < static_cast<GenId>(pres.generators().size()); ++g) {
            NCPoly dd = d(d(NCPoly::of_gen(g)));
            rep.add("d^2 " + pres.gen(g).name + " = 0", dd.is_zero(),
                    dd.is_zero() ? "" : dd.to_string(pres));
        }
        for (auto& r : pres.rules()) {
            NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
            NCPoly img = d(rel);
            rep.add("d compatible with " + pres.word_to_string(r.lhs), img.is_zero(),
                    img.is_zero() ? "" : img.to_string(pres));
        }
        return rep;
    }
};

namespace detail {

inline NCPoly leibniz_raw(const std::vector<NCPoly>& dmap, const Presentation& skeleton,
                          const NCPoly& p) {
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        int sign_deg = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            GenId g = static_cast<GenId>(static_cast<unsigned char>(w[i]));
            const NCPoly& dg = dmap.at(static_cast<size_t>(g));
            if (!dg.is_zero()) {
                Scalar coeff = (sign_deg % 2) ? -c : c;
                NCPoly piece = NCPoly::of_word(w.substr(0, i), coeff).concat(dg);
                piece = piece.concat(NCPoly::of_word(w.substr(i + 1)));
                out += piece;
            }
            sign_deg += skeleton.gen(g).form_degree;
        }
    }
    return out;
}

}  // namespace detail

/// Assemble a differential graded algebra from a parsed declaration: build
/// the base presentation, then rebuild it with the differentiated images of
/// all declared relations adjoined as extra form relations.
inline DGAPresentation dga_from_document(const dsl::SpecDocument& doc) {
    Presentation base = dsl::build_presentation(doc);
    std::vector<NCPoly> dmap(base.generators().size());
    for (auto& [name, img] : doc.dmap) dmap[static_cast<size_t>(base.require(name))] = img;

    // Differentiate every installed rule and re-declare the results as
    // relations; the rebuilt presentation then reduces forms consistently.
    std::vector<dsl::Relation> extra;
    for (auto& r : base.rules()) {
        NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
        NCPoly drel = detail::leibniz_raw(dmap, base, rel);
        if (drel.is_zero()) continue;
        extra.push_back({drel, NCPoly::zero()});
    }
    DGAPresentation out;
    out.pres = dsl::build_presentation(doc, extra);
    out.dmap = std::move(dmap);
    return out;
}

/// Localize a DGA at a central generator with central differential:
/// d(g^{-1}) = -g^{-1} (dg) g^{-1}.
inline DGAPresentation dga_localize(const DGAPresentation& dga, GenId g) {
    Presentation loc = localize_central(dga.pres, g);
    DGAPresentation out;
    out.dmap = dga.dmap;
    if (loc.generators().size() > dga.pres.generators().size()) {
        GenId inv = loc.require(dga.pres.gen(g).name + "_inv");
        NCPoly dg = dga.dmap.at(static_cast<size_t>(g));
        NCPoly dinv = -NCPoly::of_gen(inv).concat(dg).concat(NCPoly::of_gen(inv));
        out.dmap.resize(loc.generators().size());
        out.dmap[static_cast<size_t>(inv)] = loc.normal_form(dinv);
    }
    out.pres = std::move(loc);
    return out;
}

/// Relative calculus: the quotient of the form algebra by a set of killed
/// one-form generators (the forms pulled back along a fibration), with
/// d_p = project after d.
struct RelativeCalculus {
    DGAPresentation total;
    std::vector<GenId> killed;

    NCPoly d_p(const NCPoly& p) const { return total.d(p); }
    const Presentation& algebra() const { return total.pres; }

    /// d_p^2 = 0 on generators and sampled words.
    CheckReport check_flat(int samples = 0, uint64_t seed = 0) const {
        CheckReport rep;
        for (GenId g = 0; g < static_cast<GenId>(total.pres.generators().size()); ++g) {
            NCPoly dd = d_p(d_p(NCPoly::of_gen(g)));
            rep.add("d_p^2 " + total.pres.gen(g).name + " = 0", dd.is_zero(),
                    dd.is_zero() ? "" : dd.to_string(total.pres));
        }
        if (samples > 0) {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<size_t> pick(0, total.pres.generators().size() - 1);
            std::uniform_int_distribution<int> len(1, 3);
            int bad = 0;
            for (int s = 0; s < samples; ++s) {
                Word w;
                for (int i = len(rng); i-- > 0;) w.push_back(static_cast<char>(pick(rng)));
                if (!d_p(d_p(NCPoly::of_word(w))).is_zero()) ++bad;
            }
            rep.add("d_p^2 = 0 on " + std::to_string(samples) + " sampled words", bad == 0,
                    bad ? std::to_string(bad) + " failures" : "");
        }
        return rep;
    }
};

/// Quotient by killed one-form generators. The kill rules are installed
/// ahead of the inherited rules so they always fire first. A rule whose
/// lhs mentions a killed generator leaves a residual relation among the
/// survivors; those are adjoined until nothing new appears.
inline RelativeCalculus relative_quotient(const DGAPresentation& dga, std::vector<GenId> killed) {
    for (GenId k : killed)
        if (dga.pres.gen(k).form_degree != 1)
            throw std::invalid_argument("relative quotient kills one-form generators only");
    std::set<GenId> kill_set(killed.begin(), killed.end());
    std::vector<std::pair<NCPoly, NCPoly>> induced;
    Presentation q;
    for (int round = 0; round < 10; ++round) {
        q = Presentation(dga.pres.name() + "/rel");
        for (auto& g : dga.pres.generators()) q.add_generator(g);
        if (dga.pres.top_form_degree()) q.set_top_form_degree(*dga.pres.top_form_degree());
        q.set_unchecked(dga.pres.unchecked());
        q.set_step_budget(dga.pres.step_budget());
        for (GenId k : killed)
            q.add_rule(word_of({k}), NCPoly::zero(), "kill-" + dga.pres.gen(k).name);
        for (auto& r : dga.pres.rules()) q.add_rule(r.lhs, r.rhs, r.name);
        for (auto& [l, r] : induced) q.add_relation(l, r, "induced");
        q.build();
        bool fresh = false;
        for (auto& r : dga.pres.rules()) {
            bool touches = false;
            for (char c : r.lhs) touches |= kill_set.count(static_cast<GenId>(static_cast<unsigned char>(c))) > 0;
            if (!touches) continue;
            NCPoly residue = q.normal_form(NCPoly::of_word(r.lhs) - r.rhs);
            if (!residue.is_zero()) {
                induced.push_back({residue, NCPoly::zero()});
                fresh = true;
            }
        }
        if (!fresh) break;
    }
    RelativeCalculus out;
    out.total.pres = std::move(q);
    out.total.dmap = dga.dmap;
    out.killed = std::move(killed);
    return out;
}

}  // namespace nct

#endif
