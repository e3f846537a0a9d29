#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "correspondence.hpp"
#include "rmatrix.hpp"
#include "twist.hpp"

namespace homtwist {

struct TwistCandidate {
    std::string name;
    Tensor2 sigma;
    std::string note;
};

struct RMatrixCandidate {
    std::string name;
    Tensor2 r;
    std::string note;
};

// Curated instance: the classical carrier with its automorphism, both
// lifts, and the attached twist / R-matrix candidates. Every candidate is
// re-validated against the monoidal lift when the instance is built; a
// failing candidate aborts construction.
struct NamedInstance {
    std::string name;
    HomBialgebra classical;  // alpha = id
    Matrix automorphism;
    HomBialgebra monoidal;
    HomBialgebra plain;
    std::vector<TwistCandidate> twists;        // valid on `monoidal`
    std::vector<RMatrixCandidate> rmatrices;   // valid on `monoidal` against monoidal_Q
    std::vector<std::string> provenance;
};

namespace instance_detail {

inline void validate_candidates(NamedInstance& inst) {
    for (const auto& tc : inst.twists) {
        auto v = validate_twist(inst.monoidal, tc.sigma);
        if (!v.twist)
            throw TheoremViolation("instance " + inst.name + ": twist candidate '" + tc.name +
                                   "' failed validation: " + v.report.first_failure()->id);
    }
    for (const auto& rc : inst.rmatrices) {
        auto v = validate_rmatrix(inst.monoidal, rc.r, RMatrixSystem::monoidal_Q);
        if (!v.rmatrix)
            throw TheoremViolation("instance " + inst.name + ": R-matrix candidate '" + rc.name +
                                   "' failed validation: " + v.report.first_failure()->id);
    }
    auto rep = check_hom_bialgebra(inst.monoidal);
    if (!rep.all_pass()) throw TheoremViolation("instance " + inst.name + ": monoidal lift failed the suite");
    rep = check_hom_bialgebra(inst.plain);
    if (!rep.all_pass()) throw TheoremViolation("instance " + inst.name + ": plain lift failed the suite");
}

}  // namespace instance_detail

// Group algebra of Z/n with Delta(g) = g (x) g, S(g) = g^{-1}, and the
// automorphism g -> g^m (requires gcd(m, n) = 1). For n = 2 the sign
// bicharacter provides a nontrivial twisting element, attached both as a
// twist and as an R-matrix candidate.
inline NamedInstance instance_group_algebra(int n, int m, int window = 8) {
    if (n < 1) throw PreconditionError("instance_group_algebra: n must be positive");
    m = ((m % n) + n) % n;
    if (std::gcd(m, n) != 1) throw PreconditionError("instance_group_algebra: gcd(m, n) != 1");

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));

    std::vector<Vec> mult(static_cast<size_t>(n) * n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[static_cast<size_t>(i) * n + j][(i + j) % n] = Rational(1);
    Vec unit = basis_vec(n, 0);
    std::vector<Tensor2> comult;
    for (int i = 0; i < n; ++i) {
        Tensor2 t(n);
        t.add(i, i, Rational(1));
        comult.push_back(std::move(t));
    }
    Vec counit(n, Rational(1));
    Matrix S(n, n);
    for (int i = 0; i < n; ++i) S.at((n - i) % n, i) = Rational(1);
    Matrix alpha(n, n);
    for (int i = 0; i < n; ++i) alpha.at((i * m) % n, i) = Rational(1);

    NamedInstance inst;
    inst.name = "z" + std::to_string(n) + (m != 1 ? "_pow" + std::to_string(m) : "");
    inst.classical = HomBialgebra(n, names, mult, unit, comult, counit, Matrix::identity(n), S,
                                  Flavor::plain, window);
    inst.automorphism = alpha;
    inst.monoidal = lift_monoidal(inst.classical, alpha);
    inst.plain = lift_plain(inst.classical, alpha);
    inst.provenance.push_back("group algebra of Z/" + std::to_string(n) + ", automorphism g -> g^" + std::to_string(m));

    {
        Tensor2 unit_tw = unit_tensor2(inst.monoidal);
        inst.twists.push_back({"unit", unit_tw, "trivial twisting element"});
        inst.rmatrices.push_back({"unit", unit_tw, "trivial R-matrix (cocommutative carrier)"});
    }
    if (n == 2) {
        // sign bicharacter on Z/2: (1/2)(1x1 + 1xg + gx1 - gxg)
        Tensor2 sb(2);
        sb.add(0, 0, rational(1, 2));
        sb.add(0, 1, rational(1, 2));
        sb.add(1, 0, rational(1, 2));
        sb.add(1, 1, rational(-1, 2));
        inst.twists.push_back({"sigma_beta", sb, "sign bicharacter 2-cocycle"});
        inst.rmatrices.push_back({"r_beta", sb, "sign bicharacter triangular R-matrix"});
        inst.provenance.push_back("bicharacter twist sigma_beta = (1/2)(1x1 + 1xg + gx1 - gxg)");
    }

    instance_detail::validate_candidates(inst);
    return inst;
}

// The four-dimensional algebra generated by a grouplike g and a
// skew-primitive x subject to g^2 = 1, x^2 = 0, xg = -gx, carrying the
// scaling automorphism g -> g, x -> lambda x. Basis order: 1, g, x, gx.
//
// Attached candidates (all re-validated at build time):
//   r0       grouplike R-matrix (1/2)(1x1 + 1xg + gx1 - gxg)
//   r_x      r0 + x (x) x - x (x) gx + gx (x) x + gx (x) gx, lambda^2 = 1 only
//   unit     trivial twist
//   sigma_beta  grouplike bicharacter twist (moves the coproduct)
//   sigma_x  1x1 + gx (x) x, lambda^2 = 1 only (fixes the coproduct, moves R)
inline NamedInstance instance_sweedler(const Rational& lambda, int window = 8) {
    if (is_zero(lambda)) throw PreconditionError("instance_sweedler: lambda must be nonzero");
    const int d = 4;
    const int one = 0, g = 1, x = 2, gx = 3;
    std::vector<std::string> names{"1", "g", "x", "gx"};

    std::vector<Vec> mult(16, Vec(d, Rational(0)));
    auto set = [&](int i, int j, int k, long long c) { mult[static_cast<size_t>(i) * d + j][k] = Rational(c); };
    for (int a = 0; a < d; ++a) set(one, a, a, 1);
    set(g, one, g, 1);
    set(x, one, x, 1);
    set(gx, one, gx, 1);
    set(g, g, one, 1);
    set(g, x, gx, 1);
    set(g, gx, x, 1);
    set(x, g, gx, -1);
    set(gx, g, x, -1);
    // x^2 = x(gx) = (gx)x = (gx)(gx) = 0

    Vec unit = basis_vec(d, one);
    std::vector<Tensor2> comult(d, Tensor2(d));
    comult[one].add(one, one, Rational(1));
    comult[g].add(g, g, Rational(1));
    comult[x].add(x, one, Rational(1));
    comult[x].add(g, x, Rational(1));
    comult[gx].add(gx, g, Rational(1));
    comult[gx].add(one, gx, Rational(1));
    Vec counit(d, Rational(0));
    counit[one] = Rational(1);
    counit[g] = Rational(1);

    Matrix S(d, d);
    S.at(one, one) = Rational(1);
    S.at(g, g) = Rational(1);
    S.at(gx, x) = Rational(-1);  // S(x) = -gx
    S.at(x, gx) = Rational(1);   // S(gx) = x

    Matrix alpha = Matrix::identity(d);
    alpha.at(x, x) = lambda;
    alpha.at(gx, gx) = lambda;

    NamedInstance inst;
    inst.name = "sweedler_" + [&] {
        std::string s = to_string(lambda);
        for (auto& ch : s)
            if (ch == '-') ch = 'm';
            else if (ch == '/') ch = '_';
        return s;
    }();
    inst.classical = HomBialgebra(d, names, mult, unit, comult, counit, Matrix::identity(d), S,
                                  Flavor::plain, window);
    inst.automorphism = alpha;
    inst.monoidal = lift_monoidal(inst.classical, alpha);
    inst.plain = lift_plain(inst.classical, alpha);
    inst.provenance.push_back("grouplike g, skew-primitive x, g^2 = 1, x^2 = 0, xg = -gx; alpha scales x by " +
                              to_string(lambda));

    Tensor2 r0(d);
    r0.add(one, one, rational(1, 2));
    r0.add(one, g, rational(1, 2));
    r0.add(g, one, rational(1, 2));
    r0.add(g, g, rational(-1, 2));
    inst.rmatrices.push_back({"r0", r0, "grouplike R-matrix"});

    inst.twists.push_back({"unit", unit_tensor2(inst.monoidal), "trivial twisting element"});

    Tensor2 sb(d);
    sb.add(one, one, rational(1, 2));
    sb.add(one, g, rational(1, 2));
    sb.add(g, one, rational(1, 2));
    sb.add(g, g, rational(-1, 2));
    inst.twists.push_back({"sigma_beta", sb, "grouplike bicharacter twist; conjugates the coproduct nontrivially"});

    if (lambda * lambda == Rational(1)) {
        // x-supported candidates survive alpha-invariance only when lambda^2 = 1
        Tensor2 rx = r0;
        rx.add(x, x, Rational(1));
        rx.add(x, gx, Rational(-1));
        rx.add(gx, x, Rational(1));
        rx.add(gx, gx, Rational(1));
        inst.rmatrices.push_back({"r_x", rx, "R-matrix with x-support (one-parameter family at s = 1)"});

        Tensor2 sx(d);
        sx.add(one, one, Rational(1));
        sx.add(gx, x, Rational(1));
        inst.twists.push_back({"sigma_x", sx, "x-supported 2-cocycle; leaves the coproduct fixed"});
        inst.provenance.push_back("x-supported candidates attach because lambda^2 = 1");
    }

    instance_detail::validate_candidates(inst);
    return inst;
}

// The libraries the verification drivers sweep by default.
inline const std::vector<NamedInstance>& builtin_instances() {
    static const std::vector<NamedInstance> all = [] {
        std::vector<NamedInstance> v;
        v.push_back(instance_group_algebra(2, 1));
        v.push_back(instance_group_algebra(4, 3));
        v.push_back(instance_sweedler(Rational(1)));
        v.push_back(instance_sweedler(Rational(-1)));
        v.push_back(instance_sweedler(Rational(2)));
        return v;
    }();
    return all;
}

inline const NamedInstance* find_instance(const std::string& name) {
    for (const auto& inst : builtin_instances())
        if (inst.name == name) return &inst;
    return nullptr;
}

}  // namespace homtwist
