#ifndef NCTWIST_TWIST_HPP
#define NCTWIST_TWIST_HPP

#include "nctwist/matrix.hpp"

#include <array>
#include <functional>

namespace nct {

/// Torus 2-cocycle: an n x n matrix of real linear forms with every row and
/// column summing to zero. F(a, b) = e^{i a.theta.b} on grading vectors.
class TorusCocycle {
public:
    TorusCocycle(size_t n, std::vector<std::vector<LinearForm>> theta)
        : n_(n), theta_(std::move(theta)) {
        if (theta_.size() != n_) throw std::invalid_argument("TorusCocycle: shape");
        for (auto& row : theta_)
            if (row.size() != n_) throw std::invalid_argument("TorusCocycle: shape");
        for (size_t i = 0; i < n_; ++i) {
            LinearForm row, col;
            for (size_t j = 0; j < n_; ++j) {
                row = row + theta_[i][j];
                col = col + theta_[j][i];
            }
            if (!row.is_zero() || !col.is_zero())
                throw std::invalid_argument("TorusCocycle: rows and columns must sum to zero");
        }
    }

    static TorusCocycle zero(size_t n) {
        return TorusCocycle(n, std::vector<std::vector<LinearForm>>(n, std::vector<LinearForm>(n)));
    }

    size_t dim() const { return n_; }
    const LinearForm& entry(size_t i, size_t j) const { return theta_[i][j]; }

    bool antisymmetric() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (theta_[i][j] != -theta_[j][i]) return false;
        return true;
    }

    LinearForm pairing(const std::vector<int>& a, const std::vector<int>& b) const {
        LinearForm acc;
        for (size_t i = 0; i < n_ && i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < n_ && j < b.size(); ++j) {
                if (!b[j]) continue;
                acc = acc + theta_[i][j] * (Rat(a[i]) * Rat(b[j]));
            }
        }
        return acc;
    }

    /// F(t^a, t^b) = e^{i a.theta.b}.
    Scalar phase(const std::vector<int>& a, const std::vector<int>& b) const {
        return pairing(a, b).to_phase();
    }

    /// Hat rescaling of a generator of grading vector w: e^{(i/2) w.theta.w},
    /// which for an antisymmetric matrix and w = e_mu - e_nu is e^{-i theta_mu_nu}.
    Scalar hat_coeff(const std::vector<int>& w) const {
        return (pairing(w, w) * Rat(1, 2)).to_phase();
    }

    TorusCocycle substitute(const Substitution& sub) const;

private:
    size_t n_;
    std::vector<std::vector<LinearForm>> theta_;
};

/// The three independent combinations determining an antisymmetric 4x4
/// matrix with vanishing row and column sums.
struct ThetaProfile {
    LinearForm theta_A, theta_B, theta;
};

/// Closed-form conversion from the three parameters to the full matrix.
inline TorusCocycle lemma_convert(const ThetaProfile& p) {
    auto quarter = [](const LinearForm& f) { return f * Rat(1, 4); };
    std::vector<std::vector<LinearForm>> th(4, std::vector<LinearForm>(4));
    LinearForm t24 = quarter(p.theta + p.theta_A - p.theta_B);
    LinearForm t13 = quarter(p.theta - p.theta_A + p.theta_B);
    LinearForm t12 = quarter(p.theta) + p.theta_A * Rat(1, 2);
    LinearForm t14 = -(p.theta * Rat(1, 2)) - quarter(p.theta_A) - quarter(p.theta_B);
    LinearForm t23 = quarter(p.theta_A) + quarter(p.theta_B);
    LinearForm t34 = quarter(p.theta) + p.theta_B * Rat(1, 2);
    th[0][1] = t12;
    th[0][2] = t13;
    th[0][3] = t14;
    th[1][2] = t23;
    th[1][3] = t24;
    th[2][3] = t34;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) th[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            -th[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return TorusCocycle(4, std::move(th));
}

/// Inverse direction: read the three combinations off a 4x4 matrix.
inline ThetaProfile lemma_extract(const TorusCocycle& c) {
    if (c.dim() != 4) throw std::invalid_argument("lemma_extract: dimension 4 expected");
    ThetaProfile p;
    p.theta_A = c.entry(0, 1) + c.entry(1, 2) + c.entry(2, 0);
    p.theta_B = c.entry(1, 2) + c.entry(2, 3) + c.entry(3, 1);
    p.theta = c.entry(0, 2) - c.entry(1, 2) + c.entry(1, 3) - c.entry(0, 3);
    return p;
}

inline TorusCocycle TorusCocycle::substitute(const Substitution& sub) const {
    // Substitute by passing through the phase representation of each entry.
    std::vector<std::vector<LinearForm>> out(n_, std::vector<LinearForm>(n_));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            Scalar ph = sub.apply(theta_[i][j].to_phase());
            if (ph.is_one()) continue;
            if (ph.terms().size() != 1)
                throw std::domain_error("cocycle substitution must stay a phase matrix");
            LinearForm f;
            for (auto [sym, e] : ph.terms().begin()->first.entries()) {
                if (e.pow != 0) throw std::domain_error("cocycle substitution must stay a phase matrix");
                f = f + LinearForm(*ParamSymbol::lookup(
                                       ParamTable::instance().names[static_cast<size_t>(sym)]),
                                   e.phase);
            }
            out[i][j] = f;
        }
    return TorusCocycle(n_, std::move(out));
}

/// Twisted product for torus gradings: p . q = F(|p|, |q|) pq on homogeneous
/// words, extended bilinearly. The result is not reduced.
inline NCPoly torus_twist_product(const NCPoly& p, const NCPoly& q, const TorusCocycle& c,
                                  const Presentation& pres) {
    NCPoly out;
    for (auto& [wp, cp] : p.terms()) {
        std::vector<int> wtp = pres.torus_weight(wp);
        for (auto& [wq, cq] : q.terms()) {
            std::vector<int> wtq = pres.torus_weight(wq);
            out.add(wp + wq, cp * cq * c.phase(wtp, wtq));
        }
    }
    return out;
}

/// hat(P)_{mu nu} = e^{-i theta_{mu nu} + (i/2)(theta_{mu mu} + theta_{nu nu})} P_{mu nu}.
inline NCMatrix hat_transform(const NCMatrix& A, const TorusCocycle& c) {
    if (A.rows() != c.dim() || A.cols() != c.dim())
        throw std::invalid_argument("hat_transform: shape mismatch");
    NCMatrix r(&A.pres(), A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) {
            LinearForm f = -c.entry(i, j) + (c.entry(i, i) + c.entry(j, j)) * Rat(1, 2);
            r(i, j) = A(i, j) * f.to_phase();
        }
    return r;
}

/// Matrix product with entrywise twisted products.
inline NCMatrix mat_mul_bullet(const NCMatrix& A, const NCMatrix& B, const TorusCocycle& c) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul_bullet: shape mismatch");
    NCMatrix r(&A.pres(), A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) {
            NCPoly acc;
            for (size_t k = 0; k < A.cols(); ++k)
                acc += torus_twist_product(A(i, k), B(k, j), c, A.pres());
            r(i, j) = A.pres().normal_form(acc);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Translation-bicharacter cocycle on matrix coactions.

/// Four-index coefficient array theta^{mu alpha}_{nu beta}, 1-based indices.
class FourIndex {
public:
    FourIndex() : a_(256) {}
    Scalar& at(int mu, int alpha, int nu, int beta) { return a_[idx(mu, alpha, nu, beta)]; }
    const Scalar& at(int mu, int alpha, int nu, int beta) const {
        return a_[idx(mu, alpha, nu, beta)];
    }

private:
    static size_t idx(int mu, int alpha, int nu, int beta) {
        auto ok = [](int x) { return x >= 1 && x <= 4; };
        if (!ok(mu) || !ok(alpha) || !ok(nu) || !ok(beta))
            throw std::out_of_range("FourIndex: indices run from 1 to 4");
        return static_cast<size_t>((mu - 1) * 64 + (alpha - 1) * 16 + (nu - 1) * 4 + (beta - 1));
    }
    std::vector<Scalar> a_;
};

/// theta^-{}^{mu alpha}_{nu beta} = (theta^{mu alpha}_{nu beta} - theta^{alpha mu}_{beta nu})/2.
inline FourIndex theta_minus(const FourIndex& th) {
    FourIndex out;
    for (int m = 1; m <= 4; ++m)
        for (int a = 1; a <= 4; ++a)
            for (int n = 1; n <= 4; ++n)
                for (int b = 1; b <= 4; ++b)
                    out.at(m, a, n, b) =
                        (th.at(m, a, n, b) - th.at(a, m, b, n)) * Scalar(Rat(1, 2));
    return out;
}

/// One coaction slot: a matrix index pair (upper fixed, lower summed).
struct Slot {
    int upper;
    int lower;
};

/// Coaction data per generator: the upper index tuple and the resolution of
/// a lower index tuple into the target algebra.
struct Coaction {
    std::vector<int> uppers;
    std::function<NCPoly(const std::vector<int>&)> resolve;
};

using CoactionMap = std::map<GenId, Coaction>;

/// F on a pair of slot lists, expanded over matchings of the nilpotent
/// derivation pairing; `scale` is +i/2 for F and -i/2 for its convolution
/// inverse.
class FMatrixCocycle {
public:
    explicit FMatrixCocycle(FourIndex theta) : theta_(std::move(theta)) {}

    const FourIndex& theta() const { return theta_; }

    Scalar F_word(const std::vector<Slot>& A, const std::vector<Slot>& B, bool inverse = false) const {
        Scalar scale = Scalar(GRat(Rat(0), Rat(inverse ? -1 : 1, 2)));
        std::vector<bool> usedB(B.size(), false);
        return match(A, B, 0, usedB, scale);
    }

    /// F(a^mu_nu, a^alpha_beta) = delta delta + (i/2) theta.
    Scalar F_pair(int mu, int nu, int alpha, int beta, bool inverse = false) const {
        return F_word({{mu, nu}}, {{alpha, beta}}, inverse);
    }

    /// The counit-style functional U(a^mu_nu) for this cocycle; trivial for
    /// block-triangular theta.
    Scalar U(int mu, int nu) const {
        Scalar acc = mu == nu ? Scalar::one() : Scalar::zero();
        for (int c = 1; c <= 4; ++c)
            acc -= theta_.at(mu, c, c, nu) * Scalar(GRat(Rat(0), Rat(1, 2)));
        return acc;
    }

private:
    Scalar match(const std::vector<Slot>& A, const std::vector<Slot>& B, size_t i,
                 std::vector<bool>& usedB, const Scalar& scale) const {
        if (i == A.size()) {
            Scalar acc = Scalar::one();
            for (size_t j = 0; j < B.size(); ++j)
                if (!usedB[j]) {
                    if (B[j].upper != B[j].lower) return Scalar::zero();
                }
            return acc;
        }
        Scalar acc;
        // leave slot i unmatched: counit factor
        if (A[i].upper == A[i].lower) acc += match(A, B, i + 1, usedB, scale);
        // or match it against an unused B slot
        for (size_t j = 0; j < B.size(); ++j) {
            if (usedB[j]) continue;
            const Scalar& th = theta_.at(A[i].upper, B[j].upper, A[i].lower, B[j].lower);
            if (th.is_zero()) continue;
            usedB[j] = true;
            acc += scale * th * match(A, B, i + 1, usedB, scale);
            usedB[j] = false;
        }
        return acc;
    }

    FourIndex theta_;
};

namespace detail {

inline void enumerate_lowers(const std::vector<int>& uppers, std::vector<int>& lowers, size_t k,
                             const std::function<void()>& emit) {
    if (k == uppers.size()) {
        emit();
        return;
    }
    for (int v = 1; v <= 4; ++v) {
        lowers[k] = v;
        enumerate_lowers(uppers, lowers, k + 1, emit);
    }
}

}  // namespace detail

/// Twisted product of comodule words under the bicharacter cocycle: expand
/// the coactions of both words, pair them through F, and resolve the summed
/// lower indices. The result is not reduced.
inline NCPoly fmatrix_twist_product(const NCPoly& p, const NCPoly& q, const FMatrixCocycle& c,
                                    const CoactionMap& co, const Presentation& pres) {
    auto word_data = [&](const Word& w) {
        std::vector<const Coaction*> per_gen;
        std::vector<int> uppers;
        for (char ch : w) {
            GenId g = static_cast<GenId>(static_cast<unsigned char>(ch));
            auto it = co.find(g);
            if (it == co.end())
                throw std::invalid_argument("no coaction declared for generator '" +
                                            pres.gen(g).name + "'");
            if (it->second.uppers.size() > 3)
                throw std::invalid_argument("coaction words longer than three slots are not supported");
            per_gen.push_back(&it->second);
            for (int u : it->second.uppers) uppers.push_back(u);
        }
        return std::make_pair(per_gen, uppers);
    };

    NCPoly out;
    for (auto& [wp, cp] : p.terms()) {
        auto [gens_p, up_p] = word_data(wp);
        for (auto& [wq, cq] : q.terms()) {
            auto [gens_q, up_q] = word_data(wq);
            std::vector<int> lo_p(up_p.size()), lo_q(up_q.size());
            detail::enumerate_lowers(up_p, lo_p, 0, [&]() {
                std::vector<Slot> A(up_p.size());
                for (size_t k = 0; k < up_p.size(); ++k) A[k] = {up_p[k], lo_p[k]};
                detail::enumerate_lowers(up_q, lo_q, 0, [&]() {
                    std::vector<Slot> B(up_q.size());
                    for (size_t k = 0; k < up_q.size(); ++k) B[k] = {up_q[k], lo_q[k]};
                    Scalar f = c.F_word(A, B);
                    if (f.is_zero()) return;
                    // resolve both words with the chosen lower indices
                    NCPoly piece = NCPoly::of_scalar(cp * cq * f);
                    size_t off = 0;
                    for (auto* g : gens_p) {
                        std::vector<int> idx(lo_p.begin() + static_cast<long>(off),
                                             lo_p.begin() + static_cast<long>(off + g->uppers.size()));
                        piece = piece.concat(g->resolve(idx));
                        off += g->uppers.size();
                    }
                    off = 0;
                    for (auto* g : gens_q) {
                        std::vector<int> idx(lo_q.begin() + static_cast<long>(off),
                                             lo_q.begin() + static_cast<long>(off + g->uppers.size()));
                        piece = piece.concat(g->resolve(idx));
                        off += g->uppers.size();
                    }
                    out += piece;
                });
            });
        }
    }
    return out;
}

/// Hopf-algebra twist of the matrix coordinate ring itself: two-sided
/// F / F^{-1} contraction through the matrix coproduct.
inline NCPoly hopf_twist_product(const NCPoly& p, const NCPoly& q, const FMatrixCocycle& c,
                                 const std::function<GenId(int, int)>& gen_of,
                                 const std::function<std::pair<int, int>(GenId)>& index_of) {
    NCPoly out;
    for (auto& [wp, cp] : p.terms()) {
        std::vector<std::pair<int, int>> hp;
        for (char ch : wp) hp.push_back(index_of(static_cast<GenId>(static_cast<unsigned char>(ch))));
        for (auto& [wq, cq] : q.terms()) {
            std::vector<std::pair<int, int>> hq;
            for (char ch : wq) hq.push_back(index_of(static_cast<GenId>(static_cast<unsigned char>(ch))));
            std::vector<int> cvec(hp.size()), dvec(hp.size()), evec(hq.size()), fvec(hq.size());
            std::vector<int> dummyp(hp.size()), dummyq(hq.size());
            std::function<void(size_t)> loop_f = [&](size_t k) {
                if (k == fvec.size()) {
                    // F(h1, g1) and F^{-1}(h3, g3)
                    std::vector<Slot> A1(hp.size()), B1(hq.size()), A3(hp.size()), B3(hq.size());
                    for (size_t i = 0; i < hp.size(); ++i) {
                        A1[i] = {hp[i].first, cvec[i]};
                        A3[i] = {dvec[i], hp[i].second};
                    }
                    for (size_t j = 0; j < hq.size(); ++j) {
                        B1[j] = {hq[j].first, evec[j]};
                        B3[j] = {fvec[j], hq[j].second};
                    }
                    Scalar f1 = c.F_word(A1, B1);
                    if (f1.is_zero()) return;
                    Scalar f3 = c.F_word(A3, B3, true);
                    if (f3.is_zero()) return;
                    Word w;
                    for (size_t i = 0; i < hp.size(); ++i)
                        w.push_back(static_cast<char>(gen_of(cvec[i], dvec[i])));
                    for (size_t j = 0; j < hq.size(); ++j)
                        w.push_back(static_cast<char>(gen_of(evec[j], fvec[j])));
                    out.add(w, cp * cq * f1 * f3);
                    return;
                }
                for (int v = 1; v <= 4; ++v) {
                    fvec[k] = v;
                    loop_f(k + 1);
                }
            };
            std::function<void(size_t)> loop_e = [&](size_t k) {
                if (k == evec.size()) {
                    loop_f(0);
                    return;
                }
                for (int v = 1; v <= 4; ++v) {
                    evec[k] = v;
                    loop_e(k + 1);
                }
            };
            std::function<void(size_t)> loop_d = [&](size_t k) {
                if (k == dvec.size()) {
                    loop_e(0);
                    return;
                }
                for (int v = 1; v <= 4; ++v) {
                    dvec[k] = v;
                    loop_d(k + 1);
                }
            };
            std::function<void(size_t)> loop_c = [&](size_t k) {
                if (k == cvec.size()) {
                    loop_d(0);
                    return;
                }
                for (int v = 1; v <= 4; ++v) {
                    cvec[k] = v;
                    loop_c(k + 1);
                }
            };
            loop_c(0);
        }
    }
    return out;
}

/// R = F_21 F^{-1}: four-index array R^{mu alpha}_{nu beta}.
inline FourIndex rmatrix_build(const FMatrixCocycle& c) {
    FourIndex R;
    for (int m = 1; m <= 4; ++m)
        for (int a = 1; a <= 4; ++a)
            for (int n = 1; n <= 4; ++n)
                for (int b = 1; b <= 4; ++b) {
                    Scalar acc;
                    for (int g = 1; g <= 4; ++g)
                        for (int d = 1; d <= 4; ++d)
                            acc += c.F_pair(a, d, m, g) * c.F_pair(g, n, d, b, true);
                    R.at(m, a, n, b) = acc;
                }
    return R;
}

/// R a a = a a R in the twisted matrix coordinate ring.
inline CheckReport rmatrix_relation_check(const Presentation& classical_gl,
                                          const FMatrixCocycle& c, const FourIndex& R,
                                          const std::function<GenId(int, int)>& gen_of,
                                          const std::function<std::pair<int, int>(GenId)>& index_of) {
    CheckReport rep;
    int bad = 0;
    std::string first;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int g = 1; g <= 4; ++g)
                for (int d = 1; d <= 4; ++d) {
                    NCPoly lhs, rhs;
                    for (int a = 1; a <= 4; ++a)
                        for (int b = 1; b <= 4; ++b) {
                            const Scalar& rl = R.at(m, n, a, b);
                            if (!rl.is_zero())
                                lhs += hopf_twist_product(NCPoly::of_gen(gen_of(a, g)),
                                                          NCPoly::of_gen(gen_of(b, d)), c, gen_of,
                                                          index_of) *
                                       rl;
                            const Scalar& rr = R.at(a, b, g, d);
                            if (!rr.is_zero())
                                rhs += hopf_twist_product(NCPoly::of_gen(gen_of(n, b)),
                                                          NCPoly::of_gen(gen_of(m, a)), c, gen_of,
                                                          index_of) *
                                       rr;
                        }
                    if (!classical_gl.reduces_to_zero(lhs - rhs)) {
                        ++bad;
                        if (first.empty())
                            first = "indices " + std::to_string(m) + std::to_string(n) +
                                    std::to_string(g) + std::to_string(d);
                    }
                }
    rep.add("R-matrix exchange relations", bad == 0,
            bad ? std::to_string(bad) + " failures, first at " + first : "");
    return rep;
}

// ---------------------------------------------------------------------------
// The quantisation functor on presentations.

/// A bullet product on the underlying free algebra.
using BulletProduct = std::function<NCPoly(const NCPoly&, const NCPoly&)>;

inline BulletProduct torus_bullet(const Presentation& pres, const TorusCocycle& c) {
    return [&pres, c](const NCPoly& a, const NCPoly& b) {
        return torus_twist_product(a, b, c, pres);
    };
}

inline BulletProduct fmatrix_bullet(const Presentation& pres, const FMatrixCocycle& c,
                                    const CoactionMap& co) {
    return [&pres, c, co](const NCPoly& a, const NCPoly& b) {
        return fmatrix_twist_product(a, b, c, co, pres);
    };
}

namespace detail {

/// phi(hat word) = hat coefficients times the left-associated bullet product
/// of the generators, as an element of the free classical algebra.
inline NCPoly phi_word(const Word& w, const BulletProduct& bullet,
                       const std::vector<Scalar>& hats) {
    if (w.empty()) return NCPoly::unit();
    Scalar coeff = Scalar::one();
    for (char ch : w) coeff *= hats[static_cast<size_t>(static_cast<unsigned char>(ch))];
    NCPoly acc = NCPoly::of_gen(static_cast<GenId>(static_cast<unsigned char>(w[0])));
    for (size_t i = 1; i < w.size(); ++i)
        acc = bullet(acc, NCPoly::of_gen(static_cast<GenId>(static_cast<unsigned char>(w[i]))));
    return acc * coeff;
}

/// Express a free classical element in the hatted bullet-word basis: the
/// triangular inverse of phi. Requires phi(w) = h_w w + lower terms.
inline NCPoly psi(NCPoly p, const TermOrder& ord, const BulletProduct& bullet,
                  const std::vector<Scalar>& hats) {
    NCPoly out;
    int guard = 0;
    while (!p.is_zero()) {
        if (++guard > 4096) throw std::runtime_error("twist: basis transport did not terminate");
        Word w = *p.leading_word(ord);
        Scalar c = p.terms().at(w);
        NCPoly img = phi_word(w, bullet, hats);
        Scalar lead = img.terms().count(w) ? img.terms().at(w) : Scalar::zero();
        if (lead.is_zero() || !lead.invertible())
            throw std::runtime_error("twist: bullet product is not triangular on word basis");
        // check the rest of img is strictly smaller
        for (auto& [iw, ic] : img.terms())
            if (iw != w && !ord.less(iw, w))
                throw std::runtime_error("twist: correction terms not below the leading word");
        Scalar f = c * lead.inverse();
        out.add(w, f);
        p -= img * f;
    }
    return out;
}

}  // namespace detail

/// Transport a classical presentation through the twist: every classical
/// rule is rewritten in the hatted word basis and re-oriented. Generators,
/// gradings, stars and centrality flags carry over unchanged.
inline Presentation twist_presentation(const Presentation& classical, const BulletProduct& bullet,
                                       const std::vector<Scalar>& hats, const std::string& name) {
    if (hats.size() != classical.generators().size())
        throw std::invalid_argument("twist_presentation: one hat coefficient per generator");
    Presentation out(name);
    for (auto& g : classical.generators()) out.add_generator(g);
    if (classical.top_form_degree()) out.set_top_form_degree(*classical.top_form_degree());
    out.set_step_budget(classical.step_budget());
    const TermOrder& ord = classical.order();
    for (auto& r : classical.rules()) {
        NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
        NCPoly transported = detail::psi(rel, ord, bullet, hats);
        out.add_relation(transported, NCPoly::zero(), r.name);
    }
    out.build();
    return out;
}

inline Presentation twist_presentation_torus(const Presentation& classical, const TorusCocycle& c,
                                             const std::string& name) {
    std::vector<Scalar> hats;
    for (auto& g : classical.generators()) hats.push_back(c.hat_coeff(g.torus_weight));
    return twist_presentation(classical, torus_bullet(classical, c), hats, name);
}

inline Presentation twist_presentation_fmatrix(const Presentation& classical,
                                               const FMatrixCocycle& c, const CoactionMap& co,
                                               const std::string& name) {
    std::vector<Scalar> hats(classical.generators().size(), Scalar::one());
    return twist_presentation(classical, fmatrix_bullet(classical, c, co), hats, name);
}

/// Mutual reduction of two presentations over the same generator list: every
/// rule of each reduces to zero in the other.
inline CheckReport mutual_reduction(const Presentation& a, const Presentation& b) {
    CheckReport rep;
    auto one_way = [&](const Presentation& from, const Presentation& to) {
        for (auto& r : from.rules()) {
            NCPoly rel = NCPoly::of_word(r.lhs) - r.rhs;
            NCPoly nf = to.normal_form(rel);
            rep.add(from.name() + " rule " + from.word_to_string(r.lhs) + " reduces in " + to.name(),
                    nf.is_zero(), nf.is_zero() ? "" : nf.to_string(to));
        }
    };
    one_way(a, b);
    one_way(b, a);
    return rep;
}

}  // namespace nct

#endif
