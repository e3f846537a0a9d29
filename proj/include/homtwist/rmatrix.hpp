#pragma once

#include <optional>
#include <string>
#include <utility>

#include "correspondence.hpp"
#include "twist.hpp"

namespace homtwist {

// Which axiom system an R-matrix candidate targets. The monoidal system
// states the two coproduct-splitting laws without alpha insertions; the
// plain system carries explicit alpha factors on the undoubled legs.
enum class RMatrixSystem { monoidal_Q, plain_q };

inline std::string to_string(RMatrixSystem s) {
    return s == RMatrixSystem::monoidal_Q ? "monoidal_Q" : "plain_q";
}

struct RMatrixData {
    Tensor2 r;
    Tensor2 r_inv;
    RMatrixSystem system;
};

struct RMatrixValidation {
    std::optional<RMatrixData> rmatrix;
    VerificationReport report;
};

namespace rmatrix_detail {

// (Delta (x) id)R and the corresponding right-hand sides of the two
// splitting laws, built through the formula engine.
inline std::pair<Tensor3, Tensor3> splitting_law_1(const HomBialgebra& H, const Tensor2& r, bool plain) {
    using namespace sw;
    // lhs: R1^1 (x) R2^1 (x) R^2   [plain: alpha on the third leg]
    ExprPtr lhs = delta(constant(r), 0);
    if (plain) lhs = alpha(lhs, 2, 1);
    // rhs: r^1 (x) R^1 (x) r^2 R^2   [plain: alpha on legs 1 and 2]
    ExprPtr rhs = tensor(constant(r), constant(r));  // legs (R1 R2 rr1 rr2)
    rhs = mul(rhs, 3, 1);    // left rr2, right R2 -> lands at 1: (R1, rr2R2, rr1)
    rhs = flip(rhs, 0, 2);   // (rr1, rr2R2, R1)
    rhs = flip(rhs, 1, 2);   // (rr1, R1, rr2R2)
    if (plain) rhs = alpha(alpha(rhs, 0, 1), 1, 1);
    SweedlerEnv env;
    return {apply_sweedler(H, lhs, env).to_tensor3(), apply_sweedler(H, rhs, env).to_tensor3()};
}

inline std::pair<Tensor3, Tensor3> splitting_law_2(const HomBialgebra& H, const Tensor2& r, bool plain) {
    using namespace sw;
    // lhs: R^1 (x) R1^2 (x) R2^2   [plain: alpha on the first leg]
    ExprPtr lhs = delta(constant(r), 1);
    if (plain) lhs = alpha(lhs, 0, 1);
    // rhs: r^1 R^1 (x) R^2 (x) r^2   [plain: alpha on legs 1 and 2]
    ExprPtr rhs = tensor(constant(r), constant(r));  // R1 R2 rr1 rr2
    rhs = mul(rhs, 2, 0);                            // left rr1, right R1 -> lands at 0: (rr1R1, R2, rr2)
    if (plain) rhs = alpha(alpha(rhs, 1, 1), 2, 1);
    SweedlerEnv env;
    return {apply_sweedler(H, lhs, env).to_tensor3(), apply_sweedler(H, rhs, env).to_tensor3()};
}

}  // namespace rmatrix_detail

// Validates an R-matrix candidate against the chosen axiom system:
// invertibility and alpha-invariance first, then the intertwining law
// R Delta(h) = Delta^op(h) R on every basis element, then both splitting
// laws as exact rank-3 identities.
inline RMatrixValidation validate_rmatrix(const HomBialgebra& H, const Tensor2& r, RMatrixSystem system) {
    if (system == RMatrixSystem::monoidal_Q && H.flavor() != Flavor::monoidal)
        throw PreconditionError("validate_rmatrix: monoidal_Q system needs monoidal flavor");
    if (system == RMatrixSystem::plain_q && H.flavor() != Flavor::plain)
        throw PreconditionError("validate_rmatrix: plain_q system needs plain flavor");
    const bool plain = system == RMatrixSystem::plain_q;

    RMatrixValidation out;
    VerificationReport& rep = out.report;

    auto invres = invert_tensor2(H, r);
    {
        CheckRecord rec{"rmatrix.invertible", "R has a two-sided inverse", invres.status == InvertStatus::ok, "", "", 0};
        if (!rec.pass)
            rec.detail = invres.status == InvertStatus::no_solution    ? "no solution"
                         : invres.status == InvertStatus::non_unique   ? "solution space not unique"
                                                                       : "one-sided inverses disagree";
        rep.add(std::move(rec));
    }
    if (invres.status != InvertStatus::ok) return out;

    twist_detail::add_equality_check(rep, "rmatrix.alpha_invariance", "(alpha (x) alpha)R = R",
                                     alpha_image(H, r, 1) == r);

    {
        CheckTimer t;
        CheckRecord rec{"rmatrix.intertwines", "R Delta(h) = Delta-op(h) R", true, "", "", 0};
        for (int h = 0; h < H.dim() && rec.pass; ++h) {
            Tensor2 lhs = hom_product(H, r, H.delta_basis(h));
            Tensor2 rhs = hom_product(H, H.delta_basis(h).flip(), r);
            if (lhs != rhs) {
                rec.pass = false;
                rec.counterexample = "(" + H.basis_names()[h] + ")";
            }
        }
        rec.micros = t.micros();
        rep.add(std::move(rec));
    }

    {
        auto [lhs, rhs] = rmatrix_detail::splitting_law_1(H, r, plain);
        twist_detail::add_equality_check(rep, "rmatrix.coproduct_splitting_1",
                                         "(Delta (x) id)R splitting law", lhs == rhs);
    }
    {
        auto [lhs, rhs] = rmatrix_detail::splitting_law_2(H, r, plain);
        twist_detail::add_equality_check(rep, "rmatrix.coproduct_splitting_2",
                                         "(id (x) Delta)R splitting law", lhs == rhs);
    }

    if (!rep.all_pass()) return out;
    out.rmatrix = RMatrixData{r, invres.inv, system};
    return out;
}

// Quantum Hom-Yang-Baxter equations with the stated parenthesizations:
//   (R12 R13) R23 = R23 (R13 R12)   and   R12 (R13 R23) = (R23 R13) R12
// where R12 = R (x) 1, R23 = 1 (x) R, R13 = (tau (x) id) R23. The leg-swap
// definition of R13 is cross-checked against the direct middle-unit
// embedding.
inline VerificationReport check_qhybe(const HomBialgebra& H, const RMatrixData& rm) {
    VerificationReport rep;
    Tensor3 r12 = embed_12(H, rm.r);
    Tensor3 r23 = embed_23(H, rm.r);
    Tensor3 r13 = r23.swap_legs12();

    twist_detail::add_equality_check(rep, "qhybe.leg13_convention",
                                     "(tau (x) id)R23 equals the direct R^1 (x) 1 (x) R^2 embedding",
                                     r13 == embed_13(H, rm.r));

    Tensor3 lhs1 = hom_product(H, hom_product(H, r12, r13), r23);
    Tensor3 rhs1 = hom_product(H, r23, hom_product(H, r13, r12));
    twist_detail::add_equality_check(rep, "qhybe.form_1", "(R12 R13)R23 = R23(R13 R12)", lhs1 == rhs1);

    Tensor3 lhs2 = hom_product(H, r12, hom_product(H, r13, r23));
    Tensor3 rhs2 = hom_product(H, hom_product(H, r23, r13), r12);
    twist_detail::add_equality_check(rep, "qhybe.form_2", "R12(R13 R23) = (R23 R13)R12", lhs2 == rhs2);
    return rep;
}

// Lifts a classically quasitriangular pair (A, R) along an invertible
// bialgebra automorphism fixing R; the lifted pair must validate against
// the monoidal system.
inline RMatrixData lift_rmatrix(const HomBialgebra& A, const Tensor2& r, const Matrix& alpha) {
    if (A.alpha() != Matrix::identity(A.dim()))
        throw PreconditionError("lift_rmatrix: input must be an ordinary bialgebra (alpha = id)");
    {
        HomBialgebra probe = A.with_coalgebra(A.comult_table(), Flavor::monoidal);
        auto classical = validate_rmatrix(probe, r, RMatrixSystem::monoidal_Q);
        if (!classical.rmatrix)
            throw PreconditionError("lift_rmatrix: (A, R) is not classically quasitriangular: " +
                                    classical.report.first_failure()->id);
    }
    Tensor2 drift = r.map_legs(alpha, alpha).plus(r.scaled(Rational(-1)));
    if (!drift.empty()) {
        const auto& k = drift.coeffs().begin()->first;
        throw PreconditionError("lift_rmatrix: (alpha (x) alpha)R != R, offending coefficient at (" +
                                std::to_string(k[0]) + "," + std::to_string(k[1]) + ")");
    }
    HomBialgebra lifted = lift_monoidal(A, alpha);
    auto val = validate_rmatrix(lifted, r, RMatrixSystem::monoidal_Q);
    if (!val.rmatrix)
        throw TheoremViolation("lift_rmatrix: lifted pair failed the monoidal system: " +
                               val.report.first_failure()->id);
    return *val.rmatrix;
}

struct TwistedRMatrix {
    Tensor2 r_sigma;            // (sigma_21 R) rho
    RMatrixData validated;      // against the plain system on H^sigma
    VerificationReport report;
};

// R^sigma = (sigma_21 R) rho, attached to H^sigma and validated against the
// plain system; failure is a defect, not bad input.
inline TwistedRMatrix twist_rmatrix(const HomBialgebra& H, const TwistData& tw, const RMatrixData& rm,
                                    const HomBialgebra& twisted) {
    if (H.flavor() != Flavor::monoidal) throw PreconditionError("twist_rmatrix: H must be monoidal");
    if (rm.system != RMatrixSystem::monoidal_Q)
        throw PreconditionError("twist_rmatrix: R must be validated against the monoidal system");

    Tensor2 r_sigma = hom_product(H, hom_product(H, tw.sigma.flip(), rm.r), tw.rho);
    auto val = validate_rmatrix(twisted, r_sigma, RMatrixSystem::plain_q);
    if (!val.rmatrix)
        throw TheoremViolation("twist_rmatrix: R^sigma failed the plain system: " +
                               val.report.first_failure()->id);
    TwistedRMatrix out{std::move(r_sigma), *val.rmatrix, std::move(val.report)};
    return out;
}

}  // namespace homtwist
