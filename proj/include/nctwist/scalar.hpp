#ifndef NCTWIST_SCALAR_HPP
#define NCTWIST_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Gaussian rational a + b*i with exact arithmetic.
struct GRat {
    Rat re{0};
    Rat im{0};

    GRat() = default;
    GRat(long n) : re(n) {}
    GRat(Rat r) : re(std::move(r)) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat zero() { return GRat(); }
    static GRat one() { return GRat(1); }
    static GRat imag_unit() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GRat conj() const { return GRat(re, -im); }

    GRat operator-() const { return GRat(-re, -im); }
    GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
    GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
    GRat operator*(const GRat& o) const {
        return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GRat inverse() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("GRat: division by zero");
        return GRat(re / n, -im / n);
    }
    GRat operator/(const GRat& o) const { return *this * o.inverse(); }

    GRat& operator+=(const GRat& o) { return *this = *this + o; }
    GRat& operator-=(const GRat& o) { return *this = *this - o; }
    GRat& operator*=(const GRat& o) { return *this = *this * o; }

    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GRat& o) const { return !(*this == o); }
    bool operator<(const GRat& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

inline std::string grat_to_string(const GRat& g) {
    auto one_part = [](const Rat& r, bool imag) {
        std::string s = rat_to_string(r);
        if (imag) {
            if (s == "1") return std::string("i");
            if (s == "-1") return std::string("-i");
            return s + "*i";
        }
        return s;
    };
    if (g.im == 0) return one_part(g.re, false);
    if (g.re == 0) return one_part(g.im, true);
    std::string s = one_part(g.re, false);
    if (g.im > 0) s += "+";
    s += one_part(g.im, true);
    return "(" + s + ")";
}

/// Formal deformation parameters. Real-additive symbols are self-conjugate
/// and not invertible; phase-unit symbols are unitary, conj inverts them.
enum class ParamKind { RealAdditive, PhaseUnit };

struct ParamTable;

/// Interned parameter symbol. Ids are process-global and assigned in
/// declaration order.
class ParamSymbol {
public:
    ParamSymbol() : id_(-1) {}
    static ParamSymbol declare(const std::string& name, ParamKind kind);
    static std::optional<ParamSymbol> lookup(const std::string& name);

    int id() const { return id_; }
    const std::string& name() const;
    ParamKind kind() const;
    bool valid() const { return id_ >= 0; }

    bool operator==(const ParamSymbol& o) const { return id_ == o.id_; }
    bool operator<(const ParamSymbol& o) const { return id_ < o.id_; }

private:
    explicit ParamSymbol(int id) : id_(id) {}
    int id_;
    friend struct ParamTable;
};

struct ParamTable {
    std::vector<std::string> names;
    std::vector<ParamKind> kinds;
    std::map<std::string, int> by_name;

    static ParamTable& instance() {
        static ParamTable t;
        return t;
    }
};

inline ParamSymbol ParamSymbol::declare(const std::string& name, ParamKind kind) {
    auto& t = ParamTable::instance();
    auto it = t.by_name.find(name);
    if (it != t.by_name.end()) {
        if (t.kinds[it->second] != kind)
            throw std::invalid_argument("parameter '" + name + "' redeclared with different kind");
        return ParamSymbol(it->second);
    }
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.kinds.push_back(kind);
    t.by_name[name] = id;
    return ParamSymbol(id);
}

inline std::optional<ParamSymbol> ParamSymbol::lookup(const std::string& name) {
    auto& t = ParamTable::instance();
    auto it = t.by_name.find(name);
    if (it == t.by_name.end()) return std::nullopt;
    return ParamSymbol(it->second);
}

inline const std::string& ParamSymbol::name() const {
    return ParamTable::instance().names.at(static_cast<size_t>(id_));
}

inline ParamKind ParamSymbol::kind() const {
    return ParamTable::instance().kinds.at(static_cast<size_t>(id_));
}

/// Exponent of one symbol inside a monomial: for a real-additive symbol th
/// this encodes th^pow * e^{i*th*phase}; for a phase-unit symbol only pow
/// is used (and may be negative).
struct ParamExp {
    int pow = 0;
    Rat phase{0};

    bool trivial() const { return pow == 0 && phase == 0; }
    bool operator==(const ParamExp& o) const { return pow == o.pow && phase == o.phase; }
    bool operator<(const ParamExp& o) const {
        if (pow != o.pow) return pow < o.pow;
        return phase < o.phase;
    }
};

/// Canonical sorted exponent vector keyed by symbol id.
class ParamMonomial {
public:
    using Entry = std::pair<int, ParamExp>;

    ParamMonomial() = default;

    static ParamMonomial unit() { return ParamMonomial(); }

    bool is_unit() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    void set(int sym, ParamExp e) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), sym,
                                   [](const Entry& a, int s) { return a.first < s; });
        if (it != entries_.end() && it->first == sym) {
            if (e.trivial())
                entries_.erase(it);
            else
                it->second = e;
        } else if (!e.trivial()) {
            entries_.insert(it, {sym, e});
        }
    }

    ParamExp get(int sym) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), sym,
                                   [](const Entry& a, int s) { return a.first < s; });
        if (it != entries_.end() && it->first == sym) return it->second;
        return ParamExp{};
    }

    ParamMonomial operator*(const ParamMonomial& o) const {
        ParamMonomial r;
        size_t i = 0, j = 0;
        while (i < entries_.size() || j < o.entries_.size()) {
            if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
                r.entries_.push_back(entries_[i++]);
            } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
                r.entries_.push_back(o.entries_[j++]);
            } else {
                ParamExp e{entries_[i].second.pow + o.entries_[j].second.pow,
                           entries_[i].second.phase + o.entries_[j].second.phase};
                if (!e.trivial()) r.entries_.push_back({entries_[i].first, e});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Conjugation: negate phase parts and phase-unit powers.
    ParamMonomial conj() const {
        ParamMonomial r;
        for (auto [sym, e] : entries_) {
            ParamExp ne = e;
            ne.phase = -e.phase;
            if (ParamSymbol::lookup(ParamTable::instance().names[static_cast<size_t>(sym)])->kind() ==
                ParamKind::PhaseUnit)
                ne.pow = -e.pow;
            if (!ne.trivial()) r.entries_.push_back({sym, ne});
        }
        return r;
    }

    /// True when the monomial is a unit of the coefficient ring: no
    /// polynomial powers of real-additive symbols.
    bool invertible() const {
        auto& t = ParamTable::instance();
        for (auto [sym, e] : entries_) {
            if (t.kinds[static_cast<size_t>(sym)] == ParamKind::RealAdditive && e.pow != 0)
                return false;
        }
        return true;
    }

    ParamMonomial inverse() const {
        if (!invertible()) throw std::domain_error("ParamMonomial: not invertible");
        ParamMonomial r;
        for (auto [sym, e] : entries_) r.entries_.push_back({sym, ParamExp{-e.pow, -e.phase}});
        return r;
    }

    bool operator==(const ParamMonomial& o) const { return entries_ == o.entries_; }
    bool operator<(const ParamMonomial& o) const { return entries_ < o.entries_; }

private:
    std::vector<Entry> entries_;
};

/// Exact coefficient: finite sum of Gaussian-rational multiples of
/// parameter monomials.
class Scalar {
public:
    using TermMap = std::map<ParamMonomial, GRat>;

    Scalar() = default;
    Scalar(long n) { add_term(ParamMonomial::unit(), GRat(n)); }
    Scalar(GRat c) { add_term(ParamMonomial::unit(), std::move(c)); }
    Scalar(Rat r) { add_term(ParamMonomial::unit(), GRat(std::move(r))); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar imag_unit() { return Scalar(GRat::imag_unit()); }

    static Scalar symbol(ParamSymbol s, int pow = 1) {
        Scalar r;
        ParamMonomial m;
        m.set(s.id(), ParamExp{pow, Rat(0)});
        r.add_term(m, GRat::one());
        return r;
    }

    /// e^{i * (coeff * sym)} for a real-additive symbol.
    static Scalar phase(ParamSymbol s, const Rat& coeff) {
        if (s.kind() != ParamKind::RealAdditive)
            throw std::invalid_argument("Scalar::phase expects a real-additive symbol");
        Scalar r;
        ParamMonomial m;
        m.set(s.id(), ParamExp{0, coeff});
        r.add_term(m, GRat::one());
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    GRat constant_part() const {
        auto it = terms_.find(ParamMonomial::unit());
        return it == terms_.end() ? GRat::zero() : it->second;
    }

    void add_term(const ParamMonomial& m, const GRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar operator-() const {
        Scalar r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Scalar operator+(const Scalar& o) const {
        Scalar r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        Scalar r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Scalar operator*(const Scalar& o) const {
        Scalar r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    Scalar conj() const {
        Scalar r;
        for (auto& [m, c] : terms_) r.add_term(m.conj(), c.conj());
        return r;
    }

    bool invertible() const {
        return terms_.size() == 1 && terms_.begin()->first.invertible() &&
               !terms_.begin()->second.is_zero();
    }

    Scalar inverse() const {
        if (!invertible()) throw std::domain_error("Scalar: not invertible: " + to_string());
        Scalar r;
        r.add_term(terms_.begin()->first.inverse(), terms_.begin()->second.inverse());
        return r;
    }

    Scalar pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        Scalar r = one();
        for (int k = 0; k < n; ++k) r *= *this;
        return r;
    }

    std::string to_string() const;

private:
    TermMap terms_;
};

inline Scalar operator*(const GRat& c, const Scalar& s) { return Scalar(c) * s; }

/// Rational linear form over real-additive symbols; the exponents of
/// torus-cocycle phases live here.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(ParamSymbol s, Rat coeff = Rat(1)) {
        if (s.kind() != ParamKind::RealAdditive)
            throw std::invalid_argument("LinearForm expects real-additive symbols");
        if (coeff != 0) coeffs_[s.id()] = std::move(coeff);
    }

    const std::map<int, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LinearForm operator+(const LinearForm& o) const {
        LinearForm r = *this;
        for (auto& [s, c] : o.coeffs_) {
            auto [it, fresh] = r.coeffs_.try_emplace(s, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
        return r;
    }
    LinearForm operator-() const {
        LinearForm r;
        for (auto& [s, c] : coeffs_) r.coeffs_[s] = -c;
        return r;
    }
    LinearForm operator-(const LinearForm& o) const { return *this + (-o); }
    LinearForm operator*(const Rat& k) const {
        LinearForm r;
        if (k == 0) return r;
        for (auto& [s, c] : coeffs_) r.coeffs_[s] = c * k;
        return r;
    }

    bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

    /// e^{i * this}.
    Scalar to_phase() const {
        Scalar r;
        ParamMonomial m;
        for (auto& [s, c] : coeffs_) m.set(s, ParamExp{0, c});
        r.add_term(m, GRat::one());
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [s, c] : coeffs_) {
            std::string cs = rat_to_string(c);
            if (!first) out += c > 0 ? " + " : " - ";
            if (first && c < 0) out += "-";
            std::string mag = rat_to_string(c < 0 ? Rat(-c) : c);
            out += (mag == "1" ? "" : mag + " ") +
                   ParamTable::instance().names[static_cast<size_t>(s)];
            first = false;
        }
        return out;
    }

private:
    std::map<int, Rat> coeffs_;
};

/// Substitution of parameter symbols. Real-additive symbols occurring only
/// polynomially may map to any Scalar; symbols occurring in a phase exponent
/// may map only to rational multiples of a single real-additive symbol (or
/// zero). Phase-unit symbols must map to invertible Scalars.
class Substitution {
public:
    void bind(ParamSymbol s, Scalar value) { map_[s.id()] = std::move(value); }
    bool empty() const { return map_.empty(); }

    Scalar apply(const Scalar& s) const {
        Scalar out;
        for (auto& [mono, coeff] : s.terms()) {
            Scalar term(coeff);
            ParamMonomial untouched;
            for (auto [sym, e] : mono.entries()) {
                auto it = map_.find(sym);
                if (it == map_.end()) {
                    untouched.set(sym, e);
                    continue;
                }
                const Scalar& v = it->second;
                ParamKind kind = ParamTable::instance().kinds[static_cast<size_t>(sym)];
                if (kind == ParamKind::PhaseUnit) {
                    if (!v.invertible())
                        throw std::domain_error("substitution maps phase-unit symbol to non-invertible value");
                    term *= v.pow(e.pow);
                } else {
                    if (e.pow != 0) term *= v.pow(e.pow);
                    if (e.phase != 0) term *= phase_image(v, e.phase);
                }
            }
            Scalar base;
            base.add_term(untouched, GRat::one());
            out += term * base;
        }
        return out;
    }

private:
    // e^{i*old*phase} with old -> v; v must be c*sym (c rational) or 0.
    static Scalar phase_image(const Scalar& v, const Rat& ph) {
        if (v.is_zero()) return Scalar::one();
        if (v.terms().size() == 1) {
            auto& [m, c] = *v.terms().begin();
            if (c.im == 0) {
                if (m.is_unit() && c.re == 0) return Scalar::one();
                if (m.entries().size() == 1) {
                    auto [sym, e] = m.entries().front();
                    if (e.pow == 1 && e.phase == 0 &&
                        ParamTable::instance().kinds[static_cast<size_t>(sym)] == ParamKind::RealAdditive) {
                        ParamMonomial pm;
                        pm.set(sym, ParamExp{0, c.re * ph});
                        Scalar r;
                        r.add_term(pm, GRat::one());
                        return r;
                    }
                }
            }
        }
        throw std::domain_error("substitution into a phase exponent must be a rational multiple of one real symbol");
    }

    std::map<int, Scalar> map_;
};

inline std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string piece;
        std::string cs = grat_to_string(c);
        std::vector<std::string> factors;
        auto& tbl = ParamTable::instance();
        for (auto [sym, e] : m.entries()) {
            const std::string& nm = tbl.names[static_cast<size_t>(sym)];
            if (e.pow != 0) {
                if (e.pow == 1)
                    factors.push_back(nm);
                else
                    factors.push_back(nm + "^" + std::to_string(e.pow));
            }
        }
        LinearForm ph;
        for (auto [sym, e] : m.entries())
            if (e.phase != 0)
                ph = ph + LinearForm(ParamSymbol::lookup(tbl.names[static_cast<size_t>(sym)]).value(), e.phase);
        if (!ph.is_zero()) factors.push_back("q(" + ph.to_string() + ")");

        if (factors.empty()) {
            piece = cs;
        } else {
            std::string f;
            for (size_t k = 0; k < factors.size(); ++k) {
                if (k) f += " ";
                f += factors[k];
            }
            if (cs == "1")
                piece = f;
            else if (cs == "-1")
                piece = "-" + f;
            else
                piece = cs + " " + f;
        }
        if (!first && !piece.empty() && piece[0] != '-') out += " + ";
        else if (!first) {
            out += " - ";
            piece = piece.substr(1);
        }
        out += piece;
        first = false;
    }
    return out;
}

}  // namespace nct

#endif
