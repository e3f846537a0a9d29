#pragma once

#include <utility>

#include "axioms.hpp"
#include "hom_data.hpp"

namespace homtwist {

// Checks that alpha is a bialgebra endomorphism of A (multiplicative,
// comultiplicative, unit- and counit-preserving). Invertibility is checked
// separately where required.
inline VerificationReport check_bialgebra_map(const HomBialgebra& A, const Matrix& alpha) {
    VerificationReport rep;
    const int d = A.dim();
    {
        CheckTimer t;
        CheckRecord rec{"map.multiplicative", "alpha(ab) = alpha(a)alpha(b)", true, "", "", 0};
        for (int i = 0; i < d && rec.pass; ++i)
            for (int j = 0; j < d && rec.pass; ++j) {
                Vec lhs = alpha.apply(A.prod(i, j));
                Vec rhs = A.mul(alpha.apply(basis_vec(d, i)), alpha.apply(basis_vec(d, j)));
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.counterexample = "(" + A.basis_names()[i] + "," + A.basis_names()[j] + ")";
                }
            }
        rec.micros = t.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer t;
        CheckRecord rec{"map.comultiplicative", "Delta(alpha(c)) = (alpha (x) alpha)Delta(c)", true, "", "", 0};
        for (int i = 0; i < d && rec.pass; ++i) {
            Tensor2 lhs = A.delta(alpha.apply(basis_vec(d, i)));
            Tensor2 rhs = A.delta_basis(i).map_legs(alpha, alpha);
            if (lhs != rhs) {
                rec.pass = false;
                rec.counterexample = "(" + A.basis_names()[i] + ")";
            }
        }
        rec.micros = t.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer t;
        CheckRecord rec{"map.unit", "alpha(1) = 1", alpha.apply(A.unit()) == A.unit(), "", "", 0};
        rec.micros = t.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer t;
        CheckRecord rec{"map.counit", "eps(alpha(c)) = eps(c)", true, "", "", 0};
        for (int i = 0; i < d && rec.pass; ++i) {
            if (A.counit(alpha.apply(basis_vec(d, i))) != A.counit_row()[i]) {
                rec.pass = false;
                rec.counterexample = "(" + A.basis_names()[i] + ")";
            }
        }
        rec.micros = t.micros();
        rep.add(std::move(rec));
    }
    return rep;
}

namespace detail {

inline std::vector<Vec> compose_mult(const HomBialgebra& A, const Matrix& post) {
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(A.dim()) * A.dim());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) out.push_back(post.apply(A.prod(i, j)));
    return out;
}

inline std::vector<Tensor2> precompose_comult(const HomBialgebra& A, const Matrix& pre) {
    std::vector<Tensor2> out;
    out.reserve(A.dim());
    for (int i = 0; i < A.dim(); ++i) {
        Tensor2 row(A.dim());
        for (int l = 0; l < A.dim(); ++l) {
            if (is_zero(pre.at(l, i))) continue;
            for (const auto& [k, v] : A.delta_basis(l).coeffs()) row.add(k[0], k[1], pre.at(l, i) * v);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace detail

// (A, alpha) -> (A, alpha, alpha o m, eta, Delta o alpha^{-1}, eps), monoidal flavor.
// A must be an ordinary bialgebra (alpha = id) and alpha an invertible
// bialgebra map; both are verified, not trusted.
inline HomBialgebra lift_monoidal(const HomBialgebra& A, const Matrix& alpha) {
    if (A.alpha() != Matrix::identity(A.dim()))
        throw PreconditionError("lift_monoidal: input must be an ordinary bialgebra (alpha = id)");
    auto rep = check_bialgebra_map(A, alpha);
    if (!rep.all_pass())
        throw PreconditionError("lift_monoidal: alpha is not a bialgebra map (" + rep.first_failure()->id + ")");
    auto alpha_inv = inverse(alpha);
    if (!alpha_inv) throw PreconditionError("lift_monoidal: alpha is singular");

    HomBialgebra out(A.dim(), A.basis_names(), detail::compose_mult(A, alpha), A.unit(),
                     detail::precompose_comult(A, *alpha_inv), A.counit_row(), alpha,
                     std::nullopt, Flavor::monoidal, A.window());
    if (A.has_antipode()) {
        // the antipode survives the lift exactly when it commutes with alpha
        if (A.antipode() * alpha == alpha * A.antipode()) out = out.with_antipode(A.antipode());
    }
    return out;
}

// Inverse construction: (H, alpha) monoidal -> ordinary bialgebra
// (H, alpha^{-1} o m, eta, Delta o alpha, eps), plus the automorphism that
// re-lifts it.
struct UnliftResult {
    HomBialgebra classical;
    Matrix automorphism;
};

inline UnliftResult unlift_monoidal(const HomBialgebra& H) {
    if (H.flavor() != Flavor::monoidal) throw PreconditionError("unlift_monoidal: flavor must be monoidal");
    const Matrix& ainv = H.alpha_pow(-1);
    HomBialgebra classical(H.dim(), H.basis_names(), detail::compose_mult(H, ainv), H.unit(),
                           detail::precompose_comult(H, H.alpha()), H.counit_row(),
                           Matrix::identity(H.dim()),
                           H.has_antipode() ? std::optional<Matrix>(H.antipode()) : std::nullopt,
                           Flavor::plain, H.window());
    return {std::move(classical), H.alpha()};
}

// (A, alpha) -> (A, alpha, alpha o m, eta, Delta o alpha, eps), plain flavor.
// Invertibility of alpha is not required by the construction itself.
inline HomBialgebra lift_plain(const HomBialgebra& A, const Matrix& alpha) {
    if (A.alpha() != Matrix::identity(A.dim()))
        throw PreconditionError("lift_plain: input must be an ordinary bialgebra (alpha = id)");
    auto rep = check_bialgebra_map(A, alpha);
    if (!rep.all_pass())
        throw PreconditionError("lift_plain: alpha is not a bialgebra map (" + rep.first_failure()->id + ")");

    HomBialgebra out(A.dim(), A.basis_names(), detail::compose_mult(A, alpha), A.unit(),
                     detail::precompose_comult(A, alpha), A.counit_row(), alpha,
                     std::nullopt, Flavor::plain, A.window());
    if (A.has_antipode() && A.antipode() * alpha == alpha * A.antipode())
        out = out.with_antipode(A.antipode());
    return out;
}

inline UnliftResult unlift_plain(const HomBialgebra& B) {
    if (B.flavor() != Flavor::plain) throw PreconditionError("unlift_plain: flavor must be plain");
    if (!B.alpha_invertible()) throw PreconditionError("unlift_plain: alpha must be invertible");
    const Matrix& ainv = B.alpha_pow(-1);
    HomBialgebra classical(B.dim(), B.basis_names(), detail::compose_mult(B, ainv), B.unit(),
                           detail::precompose_comult(B, ainv), B.counit_row(),
                           Matrix::identity(B.dim()),
                           B.has_antipode() ? std::optional<Matrix>(B.antipode()) : std::nullopt,
                           Flavor::plain, B.window());
    return {std::move(classical), B.alpha()};
}

}  // namespace homtwist
