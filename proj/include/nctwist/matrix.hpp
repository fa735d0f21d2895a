#ifndef NCTWIST_MATRIX_HPP
#define NCTWIST_MATRIX_HPP

#include "nctwist/dga.hpp"

namespace nct {

/// Rectangular matrix over a presented algebra. Entries are kept in normal
/// form; operations reduce through the presentation they are built over.
class NCMatrix {
public:
    NCMatrix() = default;
    NCMatrix(const Presentation* pres, size_t rows, size_t cols)
        : pres_(pres), rows_(rows), cols_(cols), a_(rows * cols) {}

    static NCMatrix identity(const Presentation* pres, size_t n) {
        NCMatrix m(pres, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = NCPoly::unit();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Presentation& pres() const { return *pres_; }

    NCPoly& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const NCPoly& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& p : a_)
            if (!pres_->normal_form(p).is_zero()) return false;
        return true;
    }

    NCMatrix operator+(const NCMatrix& o) const {
        check(o);
        NCMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    NCMatrix operator-(const NCMatrix& o) const {
        check(o);
        NCMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    NCMatrix scale(const NCPoly& left) const {
        NCMatrix r(pres_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = pres_->mul(left, a_[k]);
        return r;
    }
    bool operator==(const NCMatrix& o) const { return (*this - o).is_zero(); }

    NCMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const {
        NCMatrix r(pres_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = f(a_[k]);
        return r;
    }

private:
    void check(const NCMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("NCMatrix: shape mismatch");
    }

    const Presentation* pres_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<NCPoly> a_;
};

inline NCMatrix mat_mul(const NCMatrix& A, const NCMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    NCMatrix r(&A.pres(), A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) {
            NCPoly acc;
            for (size_t k = 0; k < A.cols(); ++k) acc += A(i, k).concat(B(k, j));
            r(i, j) = A.pres().normal_form(acc);
        }
    return r;
}

inline NCMatrix mat_dagger(const NCMatrix& A) {
    NCMatrix r(&A.pres(), A.cols(), A.rows());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) r(j, i) = A.pres().star(A(i, j));
    return r;
}

inline NCPoly mat_trace(const NCMatrix& A) {
    NCPoly t;
    for (size_t i = 0; i < A.rows() && i < A.cols(); ++i) t += A(i, i);
    return A.pres().normal_form(t);
}

/// A^2 = A, Tr A = expected, A = A^dagger, all entrywise after reduction.
inline CheckReport projector_report(const NCMatrix& A, const NCPoly& expected_trace,
                                    const std::string& label = "") {
    CheckReport rep;
    if (A.rows() != A.cols()) {
        rep.add(label + " square", false, "matrix is not square");
        return rep;
    }
    NCMatrix sq = mat_mul(A, A) - A;
    rep.add(label + " idempotent", sq.is_zero());
    NCPoly tr = A.pres().normal_form(mat_trace(A) - expected_trace);
    rep.add(label + " trace", tr.is_zero(), tr.is_zero() ? "" : tr.to_string(A.pres()));
    NCMatrix adj = mat_dagger(A) - A;
    rep.add(label + " self-adjoint", adj.is_zero());
    return rep;
}

/// d applied entrywise.
inline NCMatrix mat_d(const NCMatrix& A, const DGAPresentation& dga) {
    return A.map([&](const NCPoly& p) { return dga.d(p); });
}

/// Curvature of the Grassmann connection of a projector: de de e.
inline NCMatrix grassmann_curvature(const NCMatrix& e, const DGAPresentation& dga) {
    NCMatrix de = mat_d(e, dga);
    return mat_mul(mat_mul(de, de), e);
}

/// Fourth wedge power (de)^4 of the entrywise differential.
inline NCMatrix curvature_fourth_power(const NCMatrix& e, const DGAPresentation& dga) {
    NCMatrix de = mat_d(e, dga);
    NCMatrix de2 = mat_mul(de, de);
    return mat_mul(de2, de2);
}

/// Coordinate one-form basis with an exact metric and a fixed orientation;
/// the Hodge star on two-forms is computed basis-wise.
struct HodgeData {
    const Presentation* pres = nullptr;
    std::vector<GenId> basis;          // one-form generators, orientation order
    GMatrix metric;                    // g_{ab} on the basis, invertible
    GMatrix metric_inv;

    static HodgeData make(const Presentation* pres, std::vector<GenId> basis, GMatrix metric) {
        HodgeData h;
        h.pres = pres;
        h.basis = std::move(basis);
        if (metric.rows() != h.basis.size() || metric.cols() != h.basis.size())
            throw std::invalid_argument("HodgeData: metric shape mismatch");
        GRat d = metric.det();
        if (!(d == GRat(1) || d == GRat(-1)))
            throw std::invalid_argument("HodgeData: metric must be unimodular for an exact star");
        h.metric = std::move(metric);
        h.metric_inv = invert(h.metric);
        return h;
    }

    static GMatrix invert(const GMatrix& m) {
        size_t n = m.rows();
        GMatrix aug(n, 2 * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
            aug(i, n + i) = GRat::one();
        }
        for (size_t c = 0; c < n; ++c) {
            size_t p = c;
            while (p < n && aug(p, c).is_zero()) ++p;
            if (p == n) throw std::invalid_argument("HodgeData: metric not invertible");
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
            GRat inv = aug(c, c).inverse();
            for (size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
            for (size_t i = 0; i < n; ++i) {
                if (i == c || aug(i, c).is_zero()) continue;
                GRat f = aug(i, c);
                for (size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
            }
        }
        GMatrix out(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
        return out;
    }
};

namespace detail {

inline int eps4(int a, int b, int c, int d) {
    int perm[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (perm[i] == perm[j]) return 0;
            if (perm[i] > perm[j]) sign = -sign;
        }
    return sign;
}

}  // namespace detail

/// Hodge star of a homogeneous two-form whose coefficients commute past the
/// basis forms: star(e_a e_b) = 1/2 g^{ac} g^{bd} eps_{cdef} e_e e_f with the
/// orientation vol = e_1 e_2 e_3 e_4.
inline NCPoly hodge_star(const NCPoly& omega, const HodgeData& h) {
    if (h.basis.size() != 4) throw std::invalid_argument("hodge_star: four-dimensional basis expected");
    const Presentation& pres = *h.pres;
    NCPoly input = pres.normal_form(omega);
    auto basis_index = [&](GenId g) -> int {
        for (size_t k = 0; k < h.basis.size(); ++k)
            if (h.basis[k] == g) return static_cast<int>(k);
        return -1;
    };
    NCPoly out;
    for (auto& [w, c] : input.terms()) {
        // split the word into a function prefix and exactly two basis forms
        Word prefix;
        std::vector<int> form_pos;
        for (char ch : w) {
            GenId g = static_cast<GenId>(static_cast<unsigned char>(ch));
            if (pres.gen(g).form_degree == 0) {
                if (!form_pos.empty())
                    throw std::invalid_argument("hodge_star: coefficients must precede the forms");
                prefix.push_back(ch);
            } else {
                int idx = basis_index(g);
                if (idx < 0) throw std::invalid_argument("hodge_star: one-form outside the declared basis");
                form_pos.push_back(idx);
            }
        }
        if (form_pos.size() != 2) throw std::invalid_argument("hodge_star: input not homogeneous of degree two");
        int a = form_pos[0], b = form_pos[1];
        for (int e = 0; e < 4; ++e)
            for (int f = e + 1; f < 4; ++f) {
                GRat coeff;
                for (int cc = 0; cc < 4; ++cc)
                    for (int dd = 0; dd < 4; ++dd) {
                        int eps = detail::eps4(cc, dd, e, f);
                        if (!eps) continue;
                        GRat term = h.metric_inv(static_cast<size_t>(cc), static_cast<size_t>(a)) *
                                    h.metric_inv(static_cast<size_t>(dd), static_cast<size_t>(b));
                        coeff += eps > 0 ? term : -term;
                    }
                if (coeff.is_zero()) continue;
                Word img = prefix;
                img.push_back(static_cast<char>(h.basis[static_cast<size_t>(e)]));
                img.push_back(static_cast<char>(h.basis[static_cast<size_t>(f)]));
                out.add(img, c * Scalar(coeff));
            }
    }
    return pres.normal_form(out);
}

struct DualityReport {
    CheckReport checks;
    bool anti_self_dual = false;
    bool self_dual = false;
};

/// Entrywise (anti-)self-duality of a matrix of two-forms. The report names
/// which duality actually holds under the declared orientation.
inline DualityReport asd_check(const NCMatrix& F, const HodgeData& h) {
    DualityReport out;
    bool asd = true, sd = true;
    for (size_t i = 0; i < F.rows(); ++i)
        for (size_t j = 0; j < F.cols(); ++j) {
            NCPoly w = F.pres().normal_form(F(i, j));
            if (w.is_zero()) continue;
            NCPoly star = hodge_star(w, h);
            if (!F.pres().normal_form(star + w).is_zero()) asd = false;
            if (!F.pres().normal_form(star - w).is_zero()) sd = false;
        }
    out.anti_self_dual = asd;
    out.self_dual = sd;
    out.checks.add("anti-self-dual", asd, sd && !asd ? "self-dual instead" : "");
    return out;
}

/// Connection axiom at sample level for the Grassmann connection of e:
/// nabla(a v) - (da) v - a nabla(v) reduces to zero for sampled a and v.
inline CheckReport grassmann_connection_axiom(const NCMatrix& e, const DGAPresentation& dga,
                                              int samples, uint64_t seed) {
    const Presentation& pres = e.pres();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pres.generators().size() - 1);
    auto rand_fn = [&]() {
        for (int tries = 0; tries < 32; ++tries) {
            GenId g = static_cast<GenId>(pick(rng));
            if (pres.gen(g).form_degree == 0) return NCPoly::of_gen(g);
        }
        return NCPoly::unit();
    };
    auto nabla = [&](const NCMatrix& row) {
        // v = vtilde e; nabla v = (d(vtilde e)) e
        NCMatrix dv = mat_d(mat_mul(row, e), dga);
        return mat_mul(dv, e);
    };
    CheckReport rep;
    int bad = 0;
    for (int s = 0; s < samples; ++s) {
        NCMatrix vt(&pres, 1, e.rows());
        for (size_t j = 0; j < e.rows(); ++j)
            vt(0, j) = (s + j) % 2 ? rand_fn() : NCPoly::zero();
        NCPoly a = rand_fn();
        NCMatrix v = mat_mul(vt, e);
        NCMatrix left = nabla(v.scale(a));
        NCMatrix da_v = v.map([&](const NCPoly& p) { return pres.normal_form(dga.d(a).concat(p)); });
        NCMatrix a_nv = nabla(v).scale(a);
        if (!(left - da_v - a_nv).is_zero()) ++bad;
    }
    rep.add("connection axiom (" + std::to_string(samples) + " samples)", bad == 0,
            bad ? std::to_string(bad) + " failures" : "");
    return rep;
}

}  // namespace nct

#endif
