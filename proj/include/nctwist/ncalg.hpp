#ifndef NCTWIST_NCALG_HPP
#define NCTWIST_NCALG_HPP

#include "nctwist/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace nct {

using GenId = int;

/// A word is a sequence of generator indices. Generator indices stay below
/// 120 so they pack into a std::string.
using Word = std::string;

inline Word word_of(std::initializer_list<GenId> gens) {
    Word w;
    for (GenId g : gens) w.push_back(static_cast<char>(g));
    return w;
}

struct Generator {
    std::string name;
    GenId star_partner = -1;        // -1: no star structure declared
    Scalar star_coeff = Scalar::one();  // star(g) = star_coeff * star_partner
    bool central = false;
    int form_degree = 0;
    int order_weight = 1;           // contribution to the graded term order
    std::vector<int> torus_weight;  // empty when not graded
    int cstar_weight = 0;
};

/// Term order: graded by order weight, then multiset comparison of the
/// letters (later-declared generators are larger), then inversion count,
/// then plain left-to-right comparison. Refines degree-lex on sorted words
/// and is compatible with concatenation and with rewriting modulo declared
/// phase commutations.
class TermOrder {
public:
    explicit TermOrder(std::vector<int> weights) : weights_(std::move(weights)) {}

    long degree(const Word& w) const {
        long d = 0;
        for (char c : w) d += weights_[static_cast<size_t>(static_cast<unsigned char>(c))];
        return d;
    }

    static long inversions(const Word& w) {
        long n = 0;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (static_cast<unsigned char>(w[i]) > static_cast<unsigned char>(w[j])) ++n;
        return n;
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Word& a, const Word& b) const {
        if (a == b) return 0;
        long da = degree(a), db = degree(b);
        if (da != db) return da < db ? -1 : 1;
        Word sa = a, sb = b;
        std::sort(sa.begin(), sa.end(),
                  [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
        std::sort(sb.begin(), sb.end(),
                  [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
        if (sa != sb) {
            size_t n = std::min(sa.size(), sb.size());
            for (size_t i = 0; i < n; ++i) {
                auto x = static_cast<unsigned char>(sa[i]);
                auto y = static_cast<unsigned char>(sb[i]);
                if (x != y) return x < y ? -1 : 1;
            }
            return sa.size() < sb.size() ? -1 : 1;
        }
        long ia = inversions(a), ib = inversions(b);
        if (ia != ib) return ia < ib ? -1 : 1;
        return a < b ? -1 : 1;
    }

    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

private:
    std::vector<int> weights_;
};

class Presentation;

/// Normal-form element: finite Scalar-weighted word sum. The map is keyed
/// in plain lexicographic order; the term order is consulted explicitly
/// where leading terms matter.
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar>;

    NCPoly() = default;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return of_word(Word()); }
    static NCPoly of_word(const Word& w, Scalar c = Scalar::one()) {
        NCPoly p;
        p.add(w, std::move(c));
        return p;
    }
    static NCPoly of_gen(GenId g, Scalar c = Scalar::one()) {
        Word w;
        w.push_back(static_cast<char>(g));
        return of_word(w, std::move(c));
    }
    static NCPoly of_scalar(Scalar c) { return of_word(Word(), std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator-() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [w, c] : o.terms_) r.add(w, c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [w, c] : o.terms_) r.add(w, -c);
        return r;
    }
    NCPoly operator*(const Scalar& s) const {
        NCPoly r;
        if (s.is_zero()) return r;
        for (auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    /// Free concatenation product, no reduction.
    NCPoly concat(const NCPoly& o) const {
        NCPoly r;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) r.add(w1 + w2, c1 * c2);
        return r;
    }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }
    bool operator<(const NCPoly& o) const { return terms_ < o.terms_; }

    std::optional<Word> leading_word(const TermOrder& ord) const {
        if (terms_.empty()) return std::nullopt;
        const Word* best = nullptr;
        for (auto& [w, c] : terms_)
            if (!best || ord.less(*best, w)) best = &w;
        return *best;
    }

    std::string to_string(const Presentation& pres) const;

private:
    TermMap terms_;
};

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
    std::string name;
};

/// Thrown when a normal-form computation exhausts its step budget.
struct BudgetExceeded : std::runtime_error {
    std::vector<std::string> trace;
    explicit BudgetExceeded(std::vector<std::string> tr)
        : std::runtime_error("rewrite step budget exceeded"), trace(std::move(tr)) {}
};

struct ReductionTrace {
    std::vector<std::string> steps;
    size_t cap = 64;
    void record(const std::string& s) {
        if (steps.size() < cap) steps.push_back(s);
    }
};

enum class MapMode { LinearHom, AntilinearHom, AntilinearAntihom };

struct CheckEntry {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(std::string label, bool pass, std::string detail = "") {
        entries.push_back({std::move(label), pass, std::move(detail)});
    }
    void merge(const CheckReport& o) {
        entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    }
};

enum class Strategy { LeftmostDeclared, RightmostReversed };

/// A finitely presented *-algebra: ordered generators plus oriented rewrite
/// rules. Immutable once built; reduction is deterministic.
class Presentation {
public:
    explicit Presentation(std::string name = "") : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    GenId add_generator(Generator g) {
        if (built_) throw std::logic_error("presentation already built");
        if (generators_.size() >= 120) throw std::length_error("generator limit exceeded");
        by_name_[g.name] = static_cast<GenId>(generators_.size());
        generators_.push_back(std::move(g));
        return static_cast<GenId>(generators_.size()) - 1;
    }

    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& gen(GenId g) const { return generators_.at(static_cast<size_t>(g)); }
    std::optional<GenId> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }
    GenId require(const std::string& name) const {
        auto g = find(name);
        if (!g) throw std::invalid_argument("unknown generator '" + name + "' in " + name_);
        return *g;
    }

    void set_top_form_degree(int d) { top_form_degree_ = d; }
    std::optional<int> top_form_degree() const { return top_form_degree_; }
    void set_unchecked(bool u) { unchecked_ = u; }
    bool unchecked() const { return unchecked_; }
    void set_step_budget(long b) { step_budget_ = b; }
    long step_budget() const { return step_budget_; }

    /// Add an oriented rule. Unless the presentation is marked unchecked,
    /// the lhs must exceed every rhs word in the term order.
    void add_rule(Word lhs, NCPoly rhs, std::string rulename = "") {
        if (built_) throw std::logic_error("presentation already built");
        if (lhs.empty()) throw std::invalid_argument("empty rule lhs");
        pending_rules_.push_back({std::move(lhs), std::move(rhs), std::move(rulename)});
    }

    /// Record a relation lhs = rhs. At build time it is reduced against the
    /// rules installed so far and then oriented by the term order.
    void add_relation(const NCPoly& left, const NCPoly& right, std::string rulename = "") {
        if (built_) throw std::logic_error("presentation already built");
        pending_relations_.push_back({left - right, std::move(rulename)});
    }

    void build() {
        if (built_) return;
        order_.emplace(order_weights());
        generate_centrality_rules();
        // Pure swap rules go in first so later relations are matched in
        // sorted form.
        std::vector<RewriteRule> swaps, others;
        for (auto& r : pending_rules_) (is_swap(r) ? swaps : others).push_back(std::move(r));
        pending_rules_.clear();
        for (auto& r : swaps) validate_and_install(std::move(r));
        for (auto& r : others) validate_and_install(std::move(r));
        built_ = true;
        for (auto& [rel, nm] : pending_relations_) {
            NCPoly nf = normal_form(rel);
            if (nf.is_zero()) continue;
            Word lead = *nf.leading_word(*order_);
            Scalar c = nf.terms().at(lead);
            if (!c.invertible())
                throw std::invalid_argument("relation leading coefficient not invertible in " +
                                            name_ + ": " + nf.to_string(*this));
            NCPoly rest;
            for (auto& [w, s] : nf.terms())
                if (w != lead) rest.add(w, s);
            validate_and_install({lead, (-rest) * c.inverse(), nm});
        }
        pending_relations_.clear();
    }

    bool built() const { return built_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const TermOrder& order() const {
        if (!order_) throw std::logic_error("presentation not built");
        return *order_;
    }

    int form_degree(const Word& w) const {
        int d = 0;
        for (char c : w) d += gen(static_cast<GenId>(static_cast<unsigned char>(c))).form_degree;
        return d;
    }

    std::vector<int> torus_weight(const Word& w) const {
        std::vector<int> acc;
        for (char c : w) {
            const auto& tw = gen(static_cast<GenId>(static_cast<unsigned char>(c))).torus_weight;
            if (acc.size() < tw.size()) acc.resize(tw.size(), 0);
            for (size_t i = 0; i < tw.size(); ++i) acc[i] += tw[i];
        }
        return acc;
    }

    int cstar_weight(const Word& w) const {
        int d = 0;
        for (char c : w) d += gen(static_cast<GenId>(static_cast<unsigned char>(c))).cstar_weight;
        return d;
    }

    /// Declared pure-phase swap g*h = phase * h*g, when one exists.
    std::optional<Scalar> pair_phase(GenId g, GenId h) const {
        auto it = pair_phase_.find({g, h});
        if (it == pair_phase_.end()) return std::nullopt;
        return it->second;
    }

    NCPoly normal_form(const NCPoly& p, ReductionTrace* trace = nullptr,
                       Strategy strategy = Strategy::LeftmostDeclared) const;

    NCPoly mul(const NCPoly& a, const NCPoly& b, ReductionTrace* trace = nullptr) const {
        return normal_form(a.concat(b), trace);
    }

    NCPoly star(const NCPoly& p) const {
        NCPoly out;
        for (auto& [w, c] : p.terms()) {
            Scalar coeff = c.conj();
            Word img;
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const Generator& g = gen(static_cast<GenId>(static_cast<unsigned char>(*it)));
                if (g.star_partner < 0)
                    throw std::domain_error("generator '" + g.name + "' has no star partner");
                coeff *= g.star_coeff;
                img.push_back(static_cast<char>(g.star_partner));
            }
            out.add(img, coeff);
        }
        return normal_form(out);
    }

    bool reduces_to_zero(const NCPoly& p, ReductionTrace* trace = nullptr) const {
        return normal_form(p, trace).is_zero();
    }

    /// Star-closure: the starred form of every rule also reduces to zero.
    CheckReport check_star_closure() const {
        CheckReport rep;
        for (auto& r : rules_) {
            NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
            NCPoly starred = star(rel);
            bool ok = reduces_to_zero(starred);
            rep.add("star-closure " + (r.name.empty() ? describe(r) : r.name), ok,
                    ok ? "" : normal_form(starred).to_string(*this));
        }
        return rep;
    }

    std::string gen_name(GenId g) const { return gen(g).name; }

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += " ";
            s += gen(static_cast<GenId>(static_cast<unsigned char>(w[i]))).name;
        }
        return s;
    }

    std::string describe(const RewriteRule& r) const {
        return word_to_string(r.lhs) + " -> " + r.rhs.to_string(*this);
    }

    NCPoly parse_word(const std::vector<std::string>& names) const {
        Word w;
        for (auto& n : names) w.push_back(static_cast<char>(require(n)));
        return NCPoly::of_word(w);
    }

private:
    std::vector<int> order_weights() const {
        std::vector<int> w;
        w.reserve(generators_.size());
        for (auto& g : generators_) w.push_back(g.order_weight);
        return w;
    }

    TermOrder order_now() const { return TermOrder(order_weights()); }

    void generate_centrality_rules() {
        TermOrder ord = order_now();
        for (GenId g = 0; g < static_cast<GenId>(generators_.size()); ++g) {
            if (!generators_[static_cast<size_t>(g)].central) continue;
            for (GenId h = 0; h < static_cast<GenId>(generators_.size()); ++h) {
                if (g == h) continue;
                if (covered_by_pending(g, h)) continue;
                int sign = (generators_[static_cast<size_t>(g)].form_degree % 2) *
                           (generators_[static_cast<size_t>(h)].form_degree % 2);
                Scalar ph = sign ? -Scalar::one() : Scalar::one();
                Word gh = word_of({g, h}), hg = word_of({h, g});
                if (ord.less(hg, gh))
                    pending_rules_.push_back({gh, NCPoly::of_word(hg, ph), ""});
                else
                    pending_rules_.push_back({hg, NCPoly::of_word(gh, ph), ""});
            }
            if (generators_[static_cast<size_t>(g)].form_degree % 2) {
                // odd central square: g*g = -g*g
                pending_rules_.push_back({word_of({g, g}), NCPoly::zero(), ""});
            }
        }
    }

    static bool is_swap(const RewriteRule& r) {
        if (r.lhs.size() != 2 || r.rhs.terms().size() != 1) return false;
        auto& [w, c] = *r.rhs.terms().begin();
        return w.size() == 2 && w[0] == r.lhs[1] && w[1] == r.lhs[0];
    }

    bool covered_by_pending(GenId g, GenId h) const {
        for (auto& r : pending_rules_) {
            if (r.lhs.size() == 2) {
                GenId a = static_cast<GenId>(static_cast<unsigned char>(r.lhs[0]));
                GenId b = static_cast<GenId>(static_cast<unsigned char>(r.lhs[1]));
                if ((a == g && b == h) || (a == h && b == g)) return true;
            }
        }
        return false;
    }

    void validate_and_install(RewriteRule r) {
        if (!unchecked_) {
            for (auto& [w, c] : r.rhs.terms()) {
                if (!order_->less(w, r.lhs))
                    throw std::invalid_argument("rule not oriented by the term order in " + name_ +
                                                ": " + describe(r));
            }
        }
        index_rule_phase(r);
        rules_.push_back(std::move(r));
    }

    void index_rule_phase(const RewriteRule& r) {
        if (!is_swap(r)) return;
        GenId a = static_cast<GenId>(static_cast<unsigned char>(r.lhs[0]));
        GenId b = static_cast<GenId>(static_cast<unsigned char>(r.lhs[1]));
        if (a == b) return;
        const Scalar& c = r.rhs.terms().begin()->second;
        if (!c.invertible()) return;
        if (pair_phase_.count({a, b})) return;
        pair_phase_[{a, b}] = c;
        pair_phase_[{b, a}] = c.inverse();
    }

    struct MatchResult {
        size_t begin;                 // index where the contracted lhs starts
        std::vector<size_t> gaps;     // positions of bypassed letters
        Scalar phase;
        const RewriteRule* rule;
    };

    std::optional<MatchResult> match_at(const Word& w, size_t pos, const RewriteRule& r) const;
    std::optional<MatchResult> find_match(const Word& w, Strategy strategy) const;

    std::string name_;
    std::vector<Generator> generators_;
    std::map<std::string, GenId> by_name_;
    std::vector<RewriteRule> pending_rules_;
    std::vector<std::pair<NCPoly, std::string>> pending_relations_;
    std::vector<RewriteRule> rules_;
    std::map<std::pair<GenId, GenId>, Scalar> pair_phase_;
    std::optional<TermOrder> order_;
    std::optional<int> top_form_degree_;
    bool unchecked_ = false;
    bool built_ = false;
    long step_budget_ = 1000000;
};

inline std::optional<Presentation::MatchResult> Presentation::match_at(const Word& w, size_t pos,
                                                                       const RewriteRule& r) const {
    const Word& L = r.lhs;
    if (L.empty() || pos >= w.size()) return std::nullopt;
    if (w[pos] != L[0]) return std::nullopt;
    // Contiguous match first.
    if (pos + L.size() <= w.size() && w.compare(pos, L.size(), L) == 0)
        return MatchResult{pos, {}, Scalar::one(), &r};
    // Match modulo declared pure-phase commutations: later lhs letters may
    // sit further right provided every bypassed letter phase-commutes with
    // the remaining matched letters.
    MatchResult m{pos, {}, Scalar::one(), &r};
    size_t j = 1;
    for (size_t i = pos + 1; i < w.size() && j < L.size(); ++i) {
        if (w[i] == L[j]) {
            ++j;
            continue;
        }
        GenId gap = static_cast<GenId>(static_cast<unsigned char>(w[i]));
        Scalar acc = Scalar::one();
        bool ok = true;
        for (size_t k = j; k < L.size(); ++k) {
            auto ph = pair_phase(gap, static_cast<GenId>(static_cast<unsigned char>(L[k])));
            if (!ph) {
                ok = false;
                break;
            }
            acc *= *ph;
        }
        if (!ok) return std::nullopt;
        m.phase *= acc;
        m.gaps.push_back(i);
    }
    if (j < L.size()) return std::nullopt;
    return m;
}

inline std::optional<Presentation::MatchResult> Presentation::find_match(const Word& w,
                                                                         Strategy strategy) const {
    if (strategy == Strategy::LeftmostDeclared) {
        for (size_t pos = 0; pos < w.size(); ++pos)
            for (auto& r : rules_)
                if (auto m = match_at(w, pos, r)) return m;
    } else {
        for (size_t pos = w.size(); pos-- > 0;)
            for (auto it = rules_.rbegin(); it != rules_.rend(); ++it)
                if (auto m = match_at(w, pos, *it)) return m;
    }
    return std::nullopt;
}

inline NCPoly Presentation::normal_form(const NCPoly& p, ReductionTrace* trace,
                                        Strategy strategy) const {
    if (!built_) throw std::logic_error("presentation '" + name_ + "' not built");
    NCPoly out;
    std::vector<std::pair<Word, Scalar>> pending(p.terms().begin(), p.terms().end());
    long steps = 0;
    ReductionTrace local;
    ReductionTrace* tr = trace ? trace : &local;
    while (!pending.empty()) {
        auto [w, c] = std::move(pending.back());
        pending.pop_back();
        if (c.is_zero()) continue;
        if (top_form_degree_ && form_degree(w) > *top_form_degree_) continue;
        auto m = find_match(w, strategy);
        if (!m) {
            out.add(w, c);
            continue;
        }
        if (++steps > step_budget_) {
            tr->record("budget hit at word " + word_to_string(w));
            throw BudgetExceeded(tr->steps);
        }
        const RewriteRule& r = *m->rule;
        tr->record(word_to_string(w) + " @" + std::to_string(m->begin) + " via " +
                   (r.name.empty() ? word_to_string(r.lhs) : r.name));
        // Assemble prefix, bypassed letters, suffix around the contracted lhs.
        Word prefix = w.substr(0, m->begin);
        Word gapword;
        std::set<size_t> gapset(m->gaps.begin(), m->gaps.end());
        size_t consumed = 0;
        size_t i = m->begin;
        Word suffix;
        for (; i < w.size(); ++i) {
            if (gapset.count(i)) {
                gapword.push_back(w[i]);
            } else if (consumed < r.lhs.size()) {
                ++consumed;
            } else {
                suffix = w.substr(i);
                break;
            }
        }
        Scalar factor = c * m->phase;
        for (auto& [rw, rc] : r.rhs.terms()) pending.emplace_back(prefix + rw + gapword + suffix, factor * rc);
    }
    return out;
}

/// Generator images defining a map between presentations.
using GenAssignment = std::map<GenId, NCPoly>;

inline NCPoly apply_map(const NCPoly& p, const GenAssignment& images, const Presentation& dst,
                        MapMode mode) {
    NCPoly out;
    for (auto& [w, c] : p.terms()) {
        Scalar coeff = (mode == MapMode::LinearHom) ? c : c.conj();
        NCPoly acc = NCPoly::of_scalar(coeff);
        Word order = w;
        if (mode == MapMode::AntilinearAntihom) std::reverse(order.begin(), order.end());
        for (char ch : order) {
            auto it = images.find(static_cast<GenId>(static_cast<unsigned char>(ch)));
            if (it == images.end())
                throw std::invalid_argument("assignment missing generator image");
            acc = acc.concat(it->second);
        }
        out += acc;
    }
    return dst.normal_form(out);
}

/// Verify that a generator assignment defines a map of the requested kind:
/// the image of every defining relation of `src` reduces to zero in `dst`.
/// Both deterministic strategies count; a reduction to zero under either is
/// a certificate.
inline CheckReport check_map(const GenAssignment& images, const Presentation& src,
                             const Presentation& dst, MapMode mode) {
    for (GenId g = 0; g < static_cast<GenId>(src.generators().size()); ++g)
        if (!images.count(g))
            throw std::invalid_argument("assignment missing generator '" + src.gen(g).name + "'");
    CheckReport rep;
    for (auto& r : src.rules()) {
        NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
        NCPoly img = apply_map(rel, images, dst, mode);
        if (!img.is_zero()) img = dst.normal_form(img, nullptr, Strategy::RightmostReversed);
        bool ok = img.is_zero();
        rep.add("map " + src.name() + "->" + dst.name() + " rule " + src.word_to_string(r.lhs), ok,
                ok ? "" : img.to_string(dst));
    }
    return rep;
}

/// Adjoin an inverse for a central element c (affine in the generators) as
/// a fresh generator named `inv_name` with c * inv = 1.
inline Presentation adjoin_central_inverse(const Presentation& pres, const NCPoly& element,
                                           const std::string& inv_name, int cstar_weight = 0) {
    Presentation out(pres.name());
    for (auto& g : pres.generators()) out.add_generator(g);
    Generator inv;
    inv.name = inv_name;
    inv.central = true;
    inv.star_partner = -1;
    inv.cstar_weight = cstar_weight;
    GenId iv = out.add_generator(inv);
    if (pres.top_form_degree()) out.set_top_form_degree(*pres.top_form_degree());
    out.set_unchecked(pres.unchecked());
    out.set_step_budget(pres.step_budget());
    for (auto& r : pres.rules()) out.add_rule(r.lhs, r.rhs, r.name);
    NCPoly prod = NCPoly::of_gen(iv).concat(element);
    out.add_relation(prod, NCPoly::unit(), inv_name + "-inverse");
    out.build();
    return out;
}

/// Localization at a central generator: adjoins g^{-1} with both inverse
/// rules. Idempotent when the inverse is already present.
inline Presentation localize_central(const Presentation& pres, GenId g) {
    if (!pres.gen(g).central)
        throw std::invalid_argument("localization requires a central generator: " + pres.gen(g).name);
    std::string inv_name = pres.gen(g).name + "_inv";
    if (pres.find(inv_name)) return pres;
    Presentation out(pres.name() + "[" + pres.gen(g).name + "^-1]");
    for (auto& gg : pres.generators()) out.add_generator(gg);
    Generator inv;
    inv.name = inv_name;
    inv.central = true;
    inv.cstar_weight = -pres.gen(g).cstar_weight;
    if (pres.gen(g).star_partner == g && pres.gen(g).star_coeff.is_one()) inv.star_partner = -1;
    for (int& t : inv.torus_weight) t = 0;
    const auto& tw = pres.gen(g).torus_weight;
    inv.torus_weight.assign(tw.size(), 0);
    for (size_t i = 0; i < tw.size(); ++i) inv.torus_weight[i] = -tw[i];
    GenId iv = out.add_generator(inv);
    if (pres.gen(g).star_partner == g && pres.gen(g).star_coeff.is_one()) {
        // self-adjoint central generator: the inverse is self-adjoint too
        auto& gens = const_cast<std::vector<Generator>&>(out.generators());
        gens[static_cast<size_t>(iv)].star_partner = iv;
    }
    if (pres.top_form_degree()) out.set_top_form_degree(*pres.top_form_degree());
    out.set_unchecked(pres.unchecked());
    out.set_step_budget(pres.step_budget());
    for (auto& r : pres.rules()) out.add_rule(r.lhs, r.rhs, r.name);
    out.add_relation(NCPoly::of_word(word_of({iv, g})), NCPoly::unit(), inv_name + "-rule");
    out.build();
    return out;
}

/// Keep exactly the words of total cstar weight zero.
inline NCPoly degree_zero_filter(const NCPoly& p, const Presentation& pres) {
    NCPoly out;
    for (auto& [w, c] : p.terms())
        if (pres.cstar_weight(w) == 0) out.add(w, c);
    return out;
}

/// Reduce sampled triple products with two strategies and both bracketings;
/// any disagreement is reported as a divergence.
inline CheckReport confluence_smoke(const Presentation& pres, int samples, uint64_t seed,
                                    int max_len = 4) {
    CheckReport rep;
    std::mt19937_64 rng(seed);
    size_t n = pres.generators().size();
    if (n == 0) {
        rep.add("confluence-smoke trivial", true);
        return rep;
    }
    auto rand_word = [&]() {
        std::uniform_int_distribution<int> len(0, max_len);
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        Word w;
        int L = len(rng);
        for (int i = 0; i < L; ++i) w.push_back(static_cast<char>(pick(rng)));
        return w;
    };
    int divergences = 0;
    std::string first_divergence;
    for (int s = 0; s < samples; ++s) {
        NCPoly w1 = NCPoly::of_word(rand_word());
        NCPoly w2 = NCPoly::of_word(rand_word());
        NCPoly w3 = NCPoly::of_word(rand_word());
        try {
            NCPoly left = pres.normal_form(w1.concat(w2).concat(w3));
            NCPoly right = pres.normal_form(w1.concat(w2.concat(w3)));
            NCPoly alt = pres.normal_form(w1.concat(w2).concat(w3), nullptr,
                                          Strategy::RightmostReversed);
            if (left != right || left != alt) {
                ++divergences;
                if (first_divergence.empty())
                    first_divergence = pres.word_to_string(w1.terms().begin()->first) + " | " +
                                       pres.word_to_string(w2.terms().begin()->first) + " | " +
                                       pres.word_to_string(w3.terms().begin()->first);
            }
        } catch (const BudgetExceeded&) {
            ++divergences;
            if (first_divergence.empty()) first_divergence = "budget exceeded";
        }
    }
    rep.add("confluence-smoke " + pres.name() + " (" + std::to_string(samples) + " samples)",
            divergences == 0,
            divergences ? std::to_string(divergences) + " divergences, first: " + first_divergence
                        : "");
    return rep;
}

inline std::string NCPoly::to_string(const Presentation& pres) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [w, c] : terms()) {
        std::string cs = c.to_string();
        std::string ws = pres.word_to_string(w);
        std::string piece;
        if (w.empty())
            piece = cs;
        else if (cs == "1")
            piece = ws;
        else if (cs == "-1")
            piece = "-" + ws;
        else if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
            piece = "(" + cs + ") " + ws;
        else
            piece = cs + " " + ws;
        if (!first) {
            if (!piece.empty() && piece[0] == '-') {
                out += " - ";
                piece = piece.substr(1);
            } else {
                out += " + ";
            }
        }
        out += piece;
        first = false;
    }
    return out;
}

}  // namespace nct

#endif
