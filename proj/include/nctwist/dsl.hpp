#ifndef NCTWIST_DSL_HPP
#define NCTWIST_DSL_HPP

#include "nctwist/ncalg.hpp"

#include <fstream>
#include <sstream>

namespace nct::dsl {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + msg),
          line(l),
          col(c) {}
};

struct Token {
    enum Kind { Ident, Int, Punct, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, src_.substr(start, pos_ - start), line_, col_};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = {Token::Int, src_.substr(start, pos_ - start), line_, col_};
        } else {
            static const std::string puncts = "{}()[],;=+-^/>";
            if (puncts.find(c) == std::string::npos)
                throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
            tok_ = {Token::Punct, std::string(1, c), line_, col_};
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::End, "", 1, 1};
};

struct GenDecl {
    std::string name;
    std::string star;      // empty: no star; "=": self-adjoint
    Scalar star_phase = Scalar::one();
    bool central = false;
    int form = 0;
    int weight = 1;
    std::vector<int> torus;
    int cstar = 0;
    int line = 0;
};

struct Relation {
    NCPoly left, right;
};

/// Explicitly oriented rewrite entry from a `rules` block: the declared
/// direction is kept, so unchecked algebras can carry diverging rules.
struct RawRule {
    Word lhs;
    NCPoly rhs;
};

struct MatrixDecl {
    std::string name;
    std::vector<std::vector<NCPoly>> rows;
};

struct CheckDirective {
    enum Kind { Projector, DSquared, StarClosure } kind;
    std::string matrix;
    NCPoly trace;
};

/// Parsed algebra declaration. Expression text is normalized at parse time,
/// so parse -> print -> parse is the identity on documents.
struct SpecDocument {
    int version = 1;
    std::string name;
    std::vector<std::pair<std::string, ParamKind>> params;
    bool commutative = false;
    bool unchecked = false;
    std::optional<int> top;
    std::vector<GenDecl> gens;
    std::vector<Relation> relations;
    std::vector<Relation> commutation;
    std::vector<RawRule> raw_rules;
    std::vector<std::pair<std::string, NCPoly>> dmap;
    std::vector<MatrixDecl> matrices;
    std::vector<CheckDirective> checks;

    std::optional<GenId> find_gen(const std::string& n) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == n) return static_cast<GenId>(i);
        return std::nullopt;
    }
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    SpecDocument parse() {
        expect_ident("version");
        doc_.version = expect_int();
        if (doc_.version != 1) fail("unsupported grammar version");
        expect_ident("algebra");
        doc_.name = expect_any_ident("algebra name");
        expect_punct("{");
        while (!at_punct("}")) {
            std::string block = expect_any_ident("block name (params/options/generators/relations/commutation/calculus/matrices/checks)");
            if (block == "params")
                parse_params();
            else if (block == "options")
                parse_options();
            else if (block == "generators")
                parse_generators();
            else if (block == "relations")
                parse_relations(doc_.relations);
            else if (block == "commutation")
                parse_relations(doc_.commutation);
            else if (block == "rules")
                parse_raw_rules();
            else if (block == "calculus")
                parse_calculus();
            else if (block == "matrices")
                parse_matrices();
            else if (block == "checks")
                parse_checks();
            else
                fail("unknown block '" + block + "'");
        }
        expect_punct("}");
        if (lex_.peek().kind != Token::End) fail("expected end of file after algebra block");
        return doc_;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(lex_.peek().line, lex_.peek().col, msg);
    }

    bool at_punct(const std::string& p) {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
    }
    bool at_ident(const std::string& s) {
        return lex_.peek().kind == Token::Ident && lex_.peek().text == s;
    }
    void expect_punct(const std::string& p) {
        if (!at_punct(p)) fail("expected '" + p + "'");
        lex_.next();
    }
    void expect_ident(const std::string& s) {
        if (!at_ident(s)) fail("expected '" + s + "'");
        lex_.next();
    }
    std::string expect_any_ident(const std::string& what) {
        if (lex_.peek().kind != Token::Ident) fail("expected " + what);
        return lex_.next().text;
    }
    int expect_int() {
        bool neg = false;
        if (at_punct("-")) {
            lex_.next();
            neg = true;
        }
        if (lex_.peek().kind != Token::Int) fail("expected integer");
        int v = std::stoi(lex_.next().text);
        return neg ? -v : v;
    }

    void parse_params() {
        expect_punct("{");
        while (!at_punct("}")) {
            std::string name = expect_any_ident("parameter name");
            if (name == "i" || name == "q") fail("'" + name + "' is reserved");
            std::string kind = expect_any_ident("'real' or 'phase'");
            ParamKind k;
            if (kind == "real")
                k = ParamKind::RealAdditive;
            else if (kind == "phase")
                k = ParamKind::PhaseUnit;
            else
                fail("expected 'real' or 'phase'");
            for (auto& [n, _] : doc_.params)
                if (n == name) fail("parameter '" + name + "' declared twice");
            doc_.params.emplace_back(name, k);
            ParamSymbol::declare(name, k);
            expect_punct(";");
        }
        expect_punct("}");
    }

    void parse_options() {
        expect_punct("{");
        while (!at_punct("}")) {
            std::string opt = expect_any_ident("option");
            if (opt == "commutative")
                doc_.commutative = true;
            else if (opt == "unchecked")
                doc_.unchecked = true;
            else if (opt == "top")
                doc_.top = expect_int();
            else
                fail("unknown option '" + opt + "'");
            expect_punct(";");
        }
        expect_punct("}");
    }

    void add_gen(GenDecl g) {
        if (g.name == "i" || g.name == "q") fail("'" + g.name + "' is reserved");
        for (auto& [pn, pk] : doc_.params)
            if (pn == g.name) fail("'" + g.name + "' already names a parameter");
        for (auto& other : doc_.gens)
            if (other.name == g.name)
                fail("generator '" + g.name + "' already declared at line " +
                     std::to_string(other.line));
        doc_.gens.push_back(std::move(g));
    }

    void parse_generators() {
        expect_punct("{");
        while (!at_punct("}")) {
            GenDecl g;
            g.line = lex_.peek().line;
            g.name = expect_any_ident("generator name");
            std::optional<GenDecl> partner;
            while (!at_punct(";")) {
                std::string a = expect_any_ident("generator annotation");
                if (a == "self") {
                    g.star = "=";
                } else if (a == "star") {
                    GenDecl p;
                    p.line = g.line;
                    p.name = expect_any_ident("star partner name");
                    partner = p;
                } else if (a == "phase") {
                    g.star_phase = parse_scalar_atom();
                } else if (a == "central") {
                    g.central = true;
                } else if (a == "form") {
                    g.form = expect_int();
                } else if (a == "weight") {
                    g.weight = expect_int();
                } else if (a == "cstar") {
                    g.cstar = expect_int();
                } else if (a == "torus") {
                    expect_punct("(");
                    g.torus.clear();
                    g.torus.push_back(expect_int());
                    while (at_punct(",")) {
                        lex_.next();
                        g.torus.push_back(expect_int());
                    }
                    expect_punct(")");
                } else {
                    fail("unknown generator annotation '" + a + "'");
                }
            }
            expect_punct(";");
            if (partner) {
                partner->central = g.central;
                partner->form = g.form;
                partner->weight = g.weight;
                partner->cstar = -g.cstar;
                for (int t : g.torus) partner->torus.push_back(-t);
                g.star = partner->name;
                std::string base = g.name;
                add_gen(g);
                partner->star = base;
                partner->star_phase = g.star_phase.conj().inverse();
                add_gen(*partner);
            } else {
                add_gen(g);
            }
        }
        expect_punct("}");
    }

    void parse_relations(std::vector<Relation>& into) {
        expect_punct("{");
        while (!at_punct("}")) {
            Relation r;
            r.left = parse_expr();
            expect_punct("=");
            r.right = parse_expr();
            expect_punct(";");
            into.push_back(std::move(r));
        }
        expect_punct("}");
    }

    void parse_raw_rules() {
        expect_punct("{");
        while (!at_punct("}")) {
            RawRule r;
            while (lex_.peek().kind == Token::Ident) {
                std::string n = lex_.next().text;
                auto g = doc_.find_gen(n);
                if (!g) fail("unknown generator '" + n + "' in rule lhs");
                r.lhs.push_back(static_cast<char>(*g));
            }
            if (r.lhs.empty()) fail("expected a generator word on the rule lhs");
            expect_punct("-");
            expect_punct(">");
            r.rhs = parse_expr();
            expect_punct(";");
            doc_.raw_rules.push_back(std::move(r));
        }
        expect_punct("}");
    }

    void parse_calculus() {
        expect_punct("{");
        while (!at_punct("}")) {
            std::string head = expect_any_ident("'d' or 'top'");
            if (head == "top") {
                doc_.top = expect_int();
            } else if (head == "d") {
                std::string gen = expect_any_ident("generator name");
                if (!doc_.find_gen(gen)) fail("unknown generator '" + gen + "'");
                expect_punct("=");
                NCPoly img = parse_expr();
                doc_.dmap.emplace_back(gen, std::move(img));
            } else {
                fail("expected 'd' or 'top'");
            }
            expect_punct(";");
        }
        expect_punct("}");
    }

    void parse_matrices() {
        expect_punct("{");
        while (!at_punct("}")) {
            MatrixDecl m;
            m.name = expect_any_ident("matrix name");
            expect_punct("=");
            expect_punct("[");
            while (true) {
                expect_punct("[");
                std::vector<NCPoly> row;
                row.push_back(parse_expr());
                while (at_punct(",")) {
                    lex_.next();
                    row.push_back(parse_expr());
                }
                expect_punct("]");
                m.rows.push_back(std::move(row));
                if (at_punct(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
            expect_punct("]");
            expect_punct(";");
            for (auto& row : m.rows)
                if (row.size() != m.rows.front().size()) fail("ragged matrix '" + m.name + "'");
            doc_.matrices.push_back(std::move(m));
        }
        expect_punct("}");
    }

    void parse_checks() {
        expect_punct("{");
        while (!at_punct("}")) {
            std::string kind = expect_any_ident("check directive");
            CheckDirective c;
            if (kind == "projector") {
                c.kind = CheckDirective::Projector;
                c.matrix = expect_any_ident("matrix name");
                expect_ident("trace");
                c.trace = parse_expr();
            } else if (kind == "dsquared") {
                c.kind = CheckDirective::DSquared;
            } else if (kind == "starclosure") {
                c.kind = CheckDirective::StarClosure;
            } else {
                fail("unknown check directive '" + kind + "'");
            }
            expect_punct(";");
            doc_.checks.push_back(std::move(c));
        }
        expect_punct("}");
    }

    // expr := ['-'] term (('+'|'-') term)*
    NCPoly parse_expr() {
        bool neg = false;
        if (at_punct("-")) {
            lex_.next();
            neg = true;
        }
        NCPoly acc = parse_term();
        if (neg) acc = -acc;
        while (at_punct("+") || at_punct("-")) {
            bool minus = lex_.next().text == "-";
            NCPoly t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool at_factor_start() {
        if (lex_.peek().kind == Token::Int) return true;
        if (lex_.peek().kind == Token::Ident) return true;
        return at_punct("(");
    }

    NCPoly parse_term() {
        NCPoly acc = parse_factor();
        while (at_factor_start()) acc = acc.concat(parse_factor());
        return acc;
    }

    NCPoly parse_factor() {
        NCPoly base = parse_atom();
        if (at_punct("^")) {
            lex_.next();
            int n = expect_int();
            if (n < 0) fail("negative powers are not supported; adjoin an inverse generator");
            NCPoly r = NCPoly::unit();
            for (int k = 0; k < n; ++k) r = r.concat(base);
            return r;
        }
        return base;
    }

    NCPoly parse_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Int) return NCPoly::of_scalar(Scalar(parse_rational()));
        if (at_punct("(")) {
            lex_.next();
            NCPoly e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == Token::Ident) {
            if (t.text == "i") {
                lex_.next();
                return NCPoly::of_scalar(Scalar::imag_unit());
            }
            if (t.text == "q") {
                lex_.next();
                expect_punct("(");
                LinearForm f = parse_linform();
                expect_punct(")");
                return NCPoly::of_scalar(f.to_phase());
            }
            std::string name = lex_.next().text;
            if (auto g = doc_.find_gen(name)) return NCPoly::of_gen(*g);
            for (auto& [pn, pk] : doc_.params)
                if (pn == name) return NCPoly::of_scalar(Scalar::symbol(*ParamSymbol::lookup(pn)));
            fail("unknown name '" + name + "' (not a generator or parameter)");
        }
        fail("expected a number, name, 'i', 'q(...)', or '('");
    }

    Rat parse_rational() {
        if (lex_.peek().kind != Token::Int) fail("expected integer");
        Rat num(lex_.next().text);
        if (at_punct("/")) {
            lex_.next();
            if (lex_.peek().kind != Token::Int) fail("expected denominator");
            Rat den(lex_.next().text);
            if (den == 0) fail("zero denominator");
            return num / den;
        }
        return num;
    }

    LinearForm parse_linform() {
        LinearForm acc;
        bool first = true;
        while (true) {
            bool neg = false;
            if (at_punct("-")) {
                lex_.next();
                neg = true;
            } else if (at_punct("+")) {
                lex_.next();
            } else if (!first) {
                break;
            }
            Rat coeff(1);
            if (lex_.peek().kind == Token::Int) coeff = parse_rational();
            if (neg) coeff = -coeff;
            if (lex_.peek().kind == Token::Ident) {
                std::string name = lex_.next().text;
                auto sym = ParamSymbol::lookup(name);
                bool declared = false;
                for (auto& [pn, pk] : doc_.params) declared |= (pn == name);
                if (!sym || !declared) fail("unknown parameter '" + name + "' in q(...)");
                if (sym->kind() != ParamKind::RealAdditive)
                    fail("q(...) needs real parameters, got phase unit '" + name + "'");
                acc = acc + LinearForm(*sym, coeff);
            } else if (coeff == 0) {
                // bare 0 allowed
            } else {
                fail("expected parameter name in q(...)");
            }
            first = false;
        }
        return acc;
    }

    Scalar parse_scalar_atom() {
        NCPoly p = parse_factor();
        if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
            fail("expected a scalar here");
        return p.terms().begin()->second;
    }

    Lexer lex_;
    SpecDocument doc_;
};

inline SpecDocument parse_algebra_spec(const std::string& text) { return Parser(text).parse(); }

inline SpecDocument parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_spec(ss.str());
}

/// Build the presentation a document declares: generators with their
/// annotations, explicit commutation rules, auto-generated graded
/// commutativity for uncovered pairs when requested, then the relations.
inline Presentation build_presentation(const SpecDocument& doc,
                                       const std::vector<Relation>& extra = {}) {
    Presentation pres(doc.name);
    for (auto& g : doc.gens) {
        Generator gen;
        gen.name = g.name;
        gen.central = g.central;
        gen.form_degree = g.form;
        gen.order_weight = g.weight;
        gen.torus_weight = g.torus;
        gen.cstar_weight = g.cstar;
        gen.star_partner = -1;
        pres.add_generator(gen);
    }
    auto& gens = const_cast<std::vector<Generator>&>(pres.generators());
    for (size_t i = 0; i < doc.gens.size(); ++i) {
        const GenDecl& g = doc.gens[i];
        if (g.star == "=") {
            gens[i].star_partner = static_cast<GenId>(i);
        } else if (!g.star.empty()) {
            auto p = doc.find_gen(g.star);
            if (!p) throw std::invalid_argument("star partner '" + g.star + "' not declared");
            gens[i].star_partner = *p;
            gens[i].star_coeff = g.star_phase;
        }
    }
    if (doc.top) pres.set_top_form_degree(*doc.top);
    pres.set_unchecked(doc.unchecked);

    // Pairs covered by explicit commutation entries are excluded from the
    // auto-generated graded commutativity.
    std::set<std::pair<GenId, GenId>> covered;
    TermOrder doc_order = [&] {
        std::vector<int> w;
        for (auto& g : doc.gens) w.push_back(g.weight);
        return TermOrder(w);
    }();
    auto as_swap = [&](const Relation& r) -> std::optional<RewriteRule> {
        // w1 = c * w2 with w2 the reversal of w1: install as a raw rule so
        // centrality generation and gap matching see the pair early.
        NCPoly diff = r.left - r.right;
        if (diff.terms().size() != 2) return std::nullopt;
        auto it = diff.terms().begin();
        auto [w1, c1] = *it;
        ++it;
        auto [w2, c2] = *it;
        if (w1.size() != 2 || w2.size() != 2 || w1[0] != w2[1] || w1[1] != w2[0])
            return std::nullopt;
        if (!c1.invertible() || !c2.invertible()) return std::nullopt;
        if (doc_order.less(w1, w2)) return RewriteRule{w2, NCPoly::of_word(w1, -c1 * c2.inverse())};
        return RewriteRule{w1, NCPoly::of_word(w2, -c2 * c1.inverse())};
    };
    for (auto& r : doc.commutation) {
        NCPoly diff = r.left - r.right;
        std::set<GenId> seen;
        for (auto& [w, c] : diff.terms())
            for (char ch : w) seen.insert(static_cast<GenId>(static_cast<unsigned char>(ch)));
        for (GenId a : seen)
            for (GenId b : seen)
                if (a != b) covered.insert({a, b});
        if (auto swap = as_swap(r))
            pres.add_rule(swap->lhs, swap->rhs);
        else
            pres.add_relation(r.left, r.right);
    }
    if (doc.commutative) {
        size_t n = doc.gens.size();
        const TermOrder& ord = doc_order;
        for (GenId a = 0; a < static_cast<GenId>(n); ++a) {
            for (GenId b = 0; b < a; ++b) {
                if (covered.count({a, b})) continue;
                if (doc.gens[static_cast<size_t>(a)].central ||
                    doc.gens[static_cast<size_t>(b)].central)
                    continue;  // centrality rules handle these
                int sign = (doc.gens[static_cast<size_t>(a)].form % 2) *
                           (doc.gens[static_cast<size_t>(b)].form % 2);
                Scalar ph = sign ? -Scalar::one() : Scalar::one();
                Word ab = word_of({a, b}), ba = word_of({b, a});
                if (ord.less(ba, ab))
                    pres.add_rule(ab, NCPoly::of_word(ba, ph));
                else
                    pres.add_rule(ba, NCPoly::of_word(ab, ph));
            }
            if (doc.gens[static_cast<size_t>(a)].form % 2 && !covered.count({a, a}))
                pres.add_rule(word_of({a, a}), NCPoly::zero());
        }
    }
    for (auto& r : doc.raw_rules) pres.add_rule(r.lhs, r.rhs);
    for (auto& r : doc.relations) pres.add_relation(r.left, r.right);
    for (auto& r : extra) pres.add_relation(r.left, r.right);
    pres.build();
    return pres;
}

inline std::string poly_text(const SpecDocument& doc, const NCPoly& p) {
    // Render against a throwaway presentation that only carries names.
    Presentation tmp(doc.name);
    for (auto& g : doc.gens) {
        Generator gen;
        gen.name = g.name;
        tmp.add_generator(gen);
    }
    return p.to_string(tmp);
}

/// Canonical printer; the output parses back to an identical document.
inline std::string print_document(const SpecDocument& doc) {
    std::ostringstream os;
    os << "version " << doc.version << "\n";
    os << "algebra " << doc.name << " {\n";
    if (!doc.params.empty()) {
        os << "  params {\n";
        for (auto& [n, k] : doc.params)
            os << "    " << n << " " << (k == ParamKind::RealAdditive ? "real" : "phase") << " ;\n";
        os << "  }\n";
    }
    if (doc.commutative || doc.unchecked || doc.top) {
        os << "  options {\n";
        if (doc.commutative) os << "    commutative ;\n";
        if (doc.unchecked) os << "    unchecked ;\n";
        if (doc.top) os << "    top " << *doc.top << " ;\n";
        os << "  }\n";
    }
    os << "  generators {\n";
    std::set<size_t> partner_printed;
    for (size_t i = 0; i < doc.gens.size(); ++i) {
        if (partner_printed.count(i)) continue;
        const GenDecl& g = doc.gens[i];
        os << "    " << g.name;
        if (g.star == "=") {
            os << " self";
        } else if (!g.star.empty()) {
            // print the pair on one line when the partner follows directly
            auto p = doc.find_gen(g.star);
            if (p && static_cast<size_t>(*p) == i + 1 && doc.gens[i + 1].star == g.name) {
                os << " star " << g.star;
                if (!g.star_phase.is_one()) os << " phase " << g.star_phase.to_string();
                partner_printed.insert(i + 1);
            }
        }
        if (g.central) os << " central";
        if (g.form) os << " form " << g.form;
        if (g.weight != 1) os << " weight " << g.weight;
        if (g.cstar) os << " cstar " << g.cstar;
        if (!g.torus.empty()) {
            os << " torus (";
            for (size_t k = 0; k < g.torus.size(); ++k) os << (k ? "," : "") << g.torus[k];
            os << ")";
        }
        os << " ;\n";
    }
    os << "  }\n";
    auto rel_block = [&](const char* name, const std::vector<Relation>& rels) {
        if (rels.empty()) return;
        os << "  " << name << " {\n";
        for (auto& r : rels)
            os << "    " << poly_text(doc, r.left) << " = " << poly_text(doc, r.right) << " ;\n";
        os << "  }\n";
    };
    rel_block("relations", doc.relations);
    rel_block("commutation", doc.commutation);
    if (!doc.raw_rules.empty()) {
        os << "  rules {\n";
        for (auto& r : doc.raw_rules) {
            os << "   ";
            for (char ch : r.lhs)
                os << " " << doc.gens[static_cast<size_t>(static_cast<unsigned char>(ch))].name;
            os << " -> " << poly_text(doc, r.rhs) << " ;\n";
        }
        os << "  }\n";
    }
    if (!doc.dmap.empty()) {
        os << "  calculus {\n";
        for (auto& [g, img] : doc.dmap) os << "    d " << g << " = " << poly_text(doc, img) << " ;\n";
        os << "  }\n";
    }
    if (!doc.matrices.empty()) {
        os << "  matrices {\n";
        for (auto& m : doc.matrices) {
            os << "    " << m.name << " = [";
            for (size_t r = 0; r < m.rows.size(); ++r) {
                os << (r ? ",[" : "[");
                for (size_t c = 0; c < m.rows[r].size(); ++c)
                    os << (c ? " , " : " ") << poly_text(doc, m.rows[r][c]);
                os << " ]";
            }
            os << "] ;\n";
        }
        os << "  }\n";
    }
    if (!doc.checks.empty()) {
        os << "  checks {\n";
        for (auto& c : doc.checks) {
            if (c.kind == CheckDirective::Projector)
                os << "    projector " << c.matrix << " trace " << poly_text(doc, c.trace) << " ;\n";
            else if (c.kind == CheckDirective::DSquared)
                os << "    dsquared ;\n";
            else
                os << "    starclosure ;\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nct::dsl

#endif
