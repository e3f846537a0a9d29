#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "sparse.hpp"
#include "tensor.hpp"

namespace homtwist {

enum class Flavor { monoidal, plain };

inline std::string to_string(Flavor f) { return f == Flavor::monoidal ? "monoidal" : "plain"; }

// One finite-dimensional Hom-bialgebra given by structure constants.
//
//   mult[i*dim+j]  : coordinates of e_i e_j
//   comult[i]      : Delta(e_i) as an element of H (x) H
//   counit         : row vector, eps(e_i) = counit[i]
//   alpha          : matrix acting on coordinates
//
// The flavor tag selects which coalgebra axiom set applies (the monoidal
// one reads the counit/coassociativity laws through alpha^{-1}).
//
// Values are immutable once constructed; alpha powers are precomputed for
// |k| <= window so lookups never mutate shared state.
class HomBialgebra {
public:
    HomBialgebra() : dim_(0), window_(0), flavor_(Flavor::plain) {}

    HomBialgebra(int dim, std::vector<std::string> basis_names, std::vector<Vec> mult, Vec unit,
                 std::vector<Tensor2> comult, Vec counit, Matrix alpha,
                 std::optional<Matrix> antipode, Flavor flavor, int window = 8)
        : dim_(dim),
          window_(window),
          basis_names_(std::move(basis_names)),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)),
          flavor_(flavor) {
        if (static_cast<int>(basis_names_.size()) != dim_ || static_cast<int>(mult_.size()) != dim_ * dim_ ||
            static_cast<int>(unit_.size()) != dim_ || static_cast<int>(comult_.size()) != dim_ ||
            static_cast<int>(counit_.size()) != dim_ || alpha.rows() != dim_ || alpha.cols() != dim_)
            throw DimensionMismatch("HomBialgebra: inconsistent structure constant shapes");
        auto inv = inverse(alpha);
        if (flavor_ == Flavor::monoidal && !inv)
            throw PreconditionError("HomBialgebra: monoidal flavor requires invertible alpha");
        pos_pows_.push_back(Matrix::identity(dim_));
        for (int k = 1; k <= window_; ++k) pos_pows_.push_back(alpha * pos_pows_.back());
        if (inv) {
            neg_pows_.push_back(*inv);
            for (int k = 2; k <= window_; ++k) neg_pows_.push_back(*inv * neg_pows_.back());
        }
    }

    int dim() const { return dim_; }
    int window() const { return window_; }
    Flavor flavor() const { return flavor_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const Vec& unit() const { return unit_; }
    const Vec& counit_row() const { return counit_; }
    const std::vector<Vec>& mult_table() const { return mult_; }
    const std::vector<Tensor2>& comult_table() const { return comult_; }

    bool alpha_invertible() const { return !neg_pows_.empty(); }
    const Matrix& alpha() const { return pos_pows_[1]; }

    const Matrix& alpha_pow(int k) const {
        if (k >= 0) {
            if (k > window_) throw AlphaWindowExceeded("alpha power " + std::to_string(k) + " outside window " + std::to_string(window_));
            return pos_pows_[k];
        }
        if (neg_pows_.empty()) throw MissingStructure("alpha is not invertible");
        if (-k > window_) throw AlphaWindowExceeded("alpha power " + std::to_string(k) + " outside window " + std::to_string(window_));
        return neg_pows_[-k - 1];
    }

    bool has_antipode() const { return antipode_.has_value(); }
    const Matrix& antipode() const {
        if (!antipode_) throw MissingStructure("antipode not present");
        return *antipode_;
    }

    const Vec& prod(int i, int j) const { return mult_[static_cast<size_t>(i) * dim_ + j]; }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out(dim_, Rational(0));
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (int j = 0; j < dim_; ++j) {
                if (is_zero(y[j])) continue;
                const Rational c = x[i] * y[j];
                const Vec& p = prod(i, j);
                for (int k = 0; k < dim_; ++k)
                    if (!is_zero(p[k])) out[k] += c * p[k];
            }
        }
        return out;
    }

    const Tensor2& delta_basis(int i) const { return comult_[i]; }

    Tensor2 delta(const Vec& x) const {
        Tensor2 out(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (const auto& [k, v] : comult_[i].coeffs()) out.add(k[0], k[1], x[i] * v);
        }
        return out;
    }

    Rational counit(const Vec& x) const {
        Rational out(0);
        for (int i = 0; i < dim_; ++i)
            if (!is_zero(x[i])) out += counit_[i] * x[i];
        return out;
    }

    Vec antipode_apply(const Vec& x) const { return antipode().apply(x); }

    // Copy with a replaced coproduct table and flavor; used by twisting and lifts.
    HomBialgebra with_coalgebra(std::vector<Tensor2> comult, Flavor flavor) const {
        HomBialgebra out = *this;
        out.comult_ = std::move(comult);
        out.flavor_ = flavor;
        return out;
    }

    HomBialgebra with_antipode(std::optional<Matrix> s) const {
        HomBialgebra out = *this;
        out.antipode_ = std::move(s);
        return out;
    }

private:
    int dim_, window_;
    std::vector<std::string> basis_names_;
    std::vector<Vec> mult_;
    Vec unit_;
    std::vector<Tensor2> comult_;
    Vec counit_;
    std::optional<Matrix> antipode_;
    Flavor flavor_;
    std::vector<Matrix> pos_pows_;  // alpha^0 .. alpha^window
    std::vector<Matrix> neg_pows_;  // alpha^-1 .. alpha^-window
};

// Structure-constant equality (tensors, unit, counit, alpha, antipode when
// both carry one). The flavor tag is deliberately not compared.
inline bool structure_equal(const HomBialgebra& a, const HomBialgebra& b) {
    if (a.dim() != b.dim()) return false;
    if (a.mult_table() != b.mult_table()) return false;
    if (a.unit() != b.unit()) return false;
    if (a.comult_table() != b.comult_table()) return false;
    if (a.counit_row() != b.counit_row()) return false;
    if (a.alpha() != b.alpha()) return false;
    if (a.has_antipode() != b.has_antipode()) return false;
    if (a.has_antipode() && a.antipode() != b.antipode()) return false;
    return true;
}

// ---- componentwise Hom-products on tensor legs ----
//
// No operation here ever re-associates: callers parenthesize by nesting.

inline Tensor2 hom_product(const HomBialgebra& A, const Tensor2& u, const Tensor2& v) {
    if (u.dim() != A.dim() || v.dim() != A.dim()) throw DimensionMismatch("hom_product: dim mismatch");
    const int d = A.dim();
    if (d < 8) {  // dense accumulator fallback for small carriers
        std::vector<Rational> acc(static_cast<size_t>(d) * d, Rational(0));
        for (const auto& [ku, cu] : u.coeffs())
            for (const auto& [kv, cv] : v.coeffs()) {
                const Rational c = cu * cv;
                const Vec& p1 = A.prod(ku[0], kv[0]);
                const Vec& p2 = A.prod(ku[1], kv[1]);
                for (int k = 0; k < d; ++k) {
                    if (is_zero(p1[k])) continue;
                    const Rational c1 = c * p1[k];
                    for (int l = 0; l < d; ++l)
                        if (!is_zero(p2[l])) acc[static_cast<size_t>(k) * d + l] += c1 * p2[l];
                }
            }
        Tensor2 out(d);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                if (!is_zero(acc[static_cast<size_t>(k) * d + l])) out.add(k, l, acc[static_cast<size_t>(k) * d + l]);
        return out;
    }
    Tensor2 out(d);
    for (const auto& [ku, cu] : u.coeffs())
        for (const auto& [kv, cv] : v.coeffs()) {
            const Rational c = cu * cv;
            const Vec& p1 = A.prod(ku[0], kv[0]);
            const Vec& p2 = A.prod(ku[1], kv[1]);
            for (int k = 0; k < d; ++k) {
                if (is_zero(p1[k])) continue;
                for (int l = 0; l < d; ++l)
                    if (!is_zero(p2[l])) out.add(k, l, c * p1[k] * p2[l]);
            }
        }
    return out;
}

inline Tensor3 hom_product(const HomBialgebra& A, const Tensor3& u, const Tensor3& v) {
    if (u.dim() != A.dim() || v.dim() != A.dim()) throw DimensionMismatch("hom_product: dim mismatch");
    const int d = A.dim();
    Tensor3 out(d);
    for (const auto& [ku, cu] : u.coeffs())
        for (const auto& [kv, cv] : v.coeffs()) {
            const Rational c = cu * cv;
            const Vec& p1 = A.prod(ku[0], kv[0]);
            const Vec& p2 = A.prod(ku[1], kv[1]);
            const Vec& p3 = A.prod(ku[2], kv[2]);
            for (int k = 0; k < d; ++k) {
                if (is_zero(p1[k])) continue;
                for (int l = 0; l < d; ++l) {
                    if (is_zero(p2[l])) continue;
                    const Rational c2 = c * p1[k] * p2[l];
                    for (int m = 0; m < d; ++m)
                        if (!is_zero(p3[m])) out.add(k, l, m, c2 * p3[m]);
                }
            }
        }
    return out;
}

inline Tensor2 unit_tensor2(const HomBialgebra& A) { return Tensor2::outer(A.unit(), A.unit()); }

inline Tensor3 unit_tensor3(const HomBialgebra& A) {
    Tensor3 out(A.dim());
    const Vec& u = A.unit();
    for (int i = 0; i < A.dim(); ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < A.dim(); ++j) {
            if (is_zero(u[j])) continue;
            for (int k = 0; k < A.dim(); ++k)
                if (!is_zero(u[k])) out.add(i, j, k, u[i] * u[j] * u[k]);
        }
    }
    return out;
}

// (alpha^k (x) alpha^k) u
inline Tensor2 alpha_image(const HomBialgebra& A, const Tensor2& u, int k) {
    const Matrix& m = A.alpha_pow(k);
    return u.map_legs(m, m);
}

inline Tensor3 alpha_image(const HomBialgebra& A, const Tensor3& u, int k) {
    const Matrix& m = A.alpha_pow(k);
    return u.map_legs(m, m, m);
}

// u (x) 1, 1 (x) u, and the middle-leg embedding u^(1) (x) 1 (x) u^(2).
inline Tensor3 embed_12(const HomBialgebra& A, const Tensor2& u) {
    Tensor3 out(A.dim());
    for (const auto& [k, v] : u.coeffs())
        for (int t = 0; t < A.dim(); ++t)
            if (!is_zero(A.unit()[t])) out.add(k[0], k[1], t, v * A.unit()[t]);
    return out;
}

inline Tensor3 embed_23(const HomBialgebra& A, const Tensor2& u) {
    Tensor3 out(A.dim());
    for (const auto& [k, v] : u.coeffs())
        for (int t = 0; t < A.dim(); ++t)
            if (!is_zero(A.unit()[t])) out.add(t, k[0], k[1], v * A.unit()[t]);
    return out;
}

inline Tensor3 embed_13(const HomBialgebra& A, const Tensor2& u) {
    Tensor3 out(A.dim());
    for (const auto& [k, v] : u.coeffs())
        for (int t = 0; t < A.dim(); ++t)
            if (!is_zero(A.unit()[t])) out.add(k[0], t, k[1], v * A.unit()[t]);
    return out;
}

// A left Hom-module over a fixed parent bialgebra. The parent reference is
// non-owning; modules must not outlive the algebra they act under.
class HomModule {
public:
    HomModule() : parent_(nullptr), dim_(0) {}

    // The known_inverse overload skips the inversion; builders that already
    // hold alpha_M^{-1} (tensor products, conjugations) use it.
    HomModule(const HomBialgebra* parent, int dim, std::vector<SparseVec> action, Matrix alpha_m,
              std::optional<Matrix> known_inverse = std::nullopt)
        : parent_(parent), dim_(dim), act_(std::move(action)), alpha_m_(std::move(alpha_m)) {
        if (static_cast<int>(act_.size()) != parent_->dim() * dim_)
            throw DimensionMismatch("HomModule: action tensor shape mismatch");
        alpha_m_inv_ = known_inverse ? std::move(known_inverse) : inverse(alpha_m_);
        if (!alpha_m_inv_) throw PreconditionError("HomModule: alpha_M must be invertible");
    }

    const HomBialgebra& parent() const { return *parent_; }
    int dim() const { return dim_; }
    const Matrix& alpha_m() const { return alpha_m_; }
    const Matrix& alpha_m_inv() const { return *alpha_m_inv_; }

    // e_h . e_m as a sparse column.
    const SparseVec& act(int h, int m) const { return act_[static_cast<size_t>(h) * dim_ + m]; }

    SparseVec act_elem(const Vec& h, const SparseVec& m) const {
        SparseVec out;
        for (int hi = 0; hi < parent_->dim(); ++hi) {
            if (is_zero(h[hi])) continue;
            for (const auto& [mi, q] : m.entries()) out.add_scaled(act(hi, mi), h[hi] * q);
        }
        return out;
    }

    SparseVec alpha_m_pow_apply(int k, const SparseVec& v) const {
        const Matrix& m = (k >= 0) ? alpha_m_ : *alpha_m_inv_;
        SparseVec out = v;
        for (int t = 0; t < (k >= 0 ? k : -k); ++t) {
            SparseVec next;
            for (const auto& [i, q] : out.entries())
                for (int r = 0; r < dim_; ++r)
                    if (!is_zero(m.at(r, i))) next.add(r, q * m.at(r, i));
            out = std::move(next);
        }
        return out;
    }

    SparseMap alpha_m_pow_map(int k) const {
        SparseMap out(dim_, dim_);
        for (int j = 0; j < dim_; ++j) out.col(j) = alpha_m_pow_apply(k, SparseVec::basis(j));
        return out;
    }

private:
    const HomBialgebra* parent_;
    int dim_;
    std::vector<SparseVec> act_;  // index h * dim + m
    Matrix alpha_m_;
    std::optional<Matrix> alpha_m_inv_;
};

}  // namespace homtwist
