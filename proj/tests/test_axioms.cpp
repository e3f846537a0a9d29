#include <catch2/catch_amalgamated.hpp>

#include "homtwist/homtwist.hpp"

using namespace homtwist;

namespace {

const CheckRecord* find_check(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.checks)
        if (c.id == id) return &c;
    return nullptr;
}

// rebuild a bialgebra with one mult entry overwritten
HomBialgebra tamper_mult(const HomBialgebra& H, int i, int j, int k, const Rational& v) {
    auto mult = H.mult_table();
    mult[static_cast<size_t>(i) * H.dim() + j][k] = v;
    return HomBialgebra(H.dim(), H.basis_names(), mult, H.unit(), H.comult_table(), H.counit_row(),
                        H.alpha(), H.has_antipode() ? std::optional<Matrix>(H.antipode()) : std::nullopt,
                        H.flavor(), H.window());
}

}  // namespace

TEST_CASE("identity-structure group algebra passes every suite") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    REQUIRE(check_hom_algebra(z2.monoidal).all_pass());
    REQUIRE(check_hom_bialgebra(z2.monoidal).all_pass());
    REQUIRE(check_antipode(z2.monoidal).all_pass());
    // with alpha = id the monoidal and plain coalgebra laws coincide
    REQUIRE(check_hom_coalgebra(z2.monoidal).all_pass());
    REQUIRE(check_hom_coalgebra(z2.plain).all_pass());
    REQUIRE(structure_equal(z2.monoidal, z2.plain));
}

TEST_CASE("lifted structures with nontrivial alpha pass their suites") {
    NamedInstance z4 = instance_group_algebra(4, 3);
    REQUIRE(check_hom_bialgebra(z4.monoidal).all_pass());
    REQUIRE(check_hom_bialgebra(z4.plain).all_pass());
    for (const Rational& lam : {Rational(1), Rational(-1), Rational(2)}) {
        NamedInstance sw = instance_sweedler(lam);
        REQUIRE(check_hom_bialgebra(sw.monoidal).all_pass());
        REQUIRE(check_antipode(sw.monoidal).all_pass());
        REQUIRE(check_hom_bialgebra(sw.plain).all_pass());
        REQUIRE(check_antipode(sw.plain).all_pass());
    }
}

TEST_CASE("tampered product breaks twisted associativity with a counterexample") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    HomBialgebra bad = tamper_mult(z2.monoidal, 1, 1, 0, Rational(2));  // g*g = 2
    auto rep = check_hom_algebra(bad);
    REQUIRE_FALSE(rep.all_pass());
    const CheckRecord* assoc = find_check(rep, "algebra.hom_associativity");
    REQUIRE(assoc != nullptr);
    REQUIRE_FALSE(assoc->pass);
    REQUIRE(assoc->counterexample == "(g,g,g)");
}

TEST_CASE("tampered counit breaks the counit law") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    Vec counit = sw.monoidal.counit_row();
    counit[1] = Rational(0);  // eps(g) := 0
    HomBialgebra bad(sw.monoidal.dim(), sw.monoidal.basis_names(), sw.monoidal.mult_table(),
                     sw.monoidal.unit(), sw.monoidal.comult_table(), counit, sw.monoidal.alpha(),
                     std::nullopt, Flavor::monoidal, 8);
    auto rep = check_hom_coalgebra(bad);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE_FALSE(find_check(rep, "coalgebra.left_counit")->pass);
}

TEST_CASE("tampered antipode fails the convolution laws on the right element") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    Matrix S = sw.monoidal.antipode();
    S.at(3, 2) = Rational(1);  // S(x) := gx instead of -gx
    HomBialgebra bad = sw.monoidal.with_antipode(S);
    auto rep = check_antipode(bad);
    REQUIRE_FALSE(rep.all_pass());
    const CheckRecord* conv = find_check(rep, "antipode.left_convolution");
    REQUIRE_FALSE(conv->pass);
    REQUIRE(conv->counterexample == "(x)");
}

TEST_CASE("failing counterexamples reproduce through the formula engine") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    HomBialgebra bad = tamper_mult(z2.monoidal, 1, 1, 0, Rational(2));
    // re-evaluate the reported counterexample (g,g,g) standalone
    using namespace sw;
    ExprPtr lhs = mul(tensor(alpha(var("a"), 0, 1), mul(tensor(var("b"), var("c")), 0, 1)), 0, 1);
    ExprPtr rhs = mul(tensor(mul(tensor(var("a"), var("b")), 0, 1), alpha(var("c"), 0, 1)), 0, 1);
    SweedlerEnv env{{"a", basis_vec(2, 1)}, {"b", basis_vec(2, 1)}, {"c", basis_vec(2, 1)}};
    REQUIRE(apply_sweedler(bad, lhs, env) != apply_sweedler(bad, rhs, env));
}

TEST_CASE("module suites: regular and trivial pass, identity structure map fails") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    REQUIRE(check_hom_module(regular_module(H)).all_pass());
    REQUIRE(check_hom_module(trivial_module(H)).all_pass());

    // regular action with alpha_M forced to the identity violates the laws
    HomModule reg = regular_module(H);
    std::vector<SparseVec> act;
    for (int h = 0; h < 4; ++h)
        for (int m = 0; m < 4; ++m) act.push_back(reg.act(h, m));
    HomModule broken(&H, 4, std::move(act), Matrix::identity(4));
    auto rep = check_hom_module(broken);
    REQUIRE_FALSE(rep.all_pass());
}

TEST_CASE("module algebra: trivial action passes, regular action fails on a noncommutative carrier") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;

    // trivial action h.a = eps(h) alpha(a) on the carrier itself
    std::vector<SparseVec> act;
    for (int h = 0; h < 4; ++h)
        for (int m = 0; m < 4; ++m) {
            SparseVec col;
            if (!is_zero(H.counit_row()[h]))
                col = SparseVec::from_dense(H.alpha_pow(1).apply(basis_vec(4, m)));
            if (!is_zero(H.counit_row()[h])) {
                SparseVec scaled;
                scaled.add_scaled(col, H.counit_row()[h]);
                col = scaled;
            }
            act.push_back(col);
        }
    HomModule eps_mod(&H, 4, std::move(act), H.alpha());
    REQUIRE(check_hom_module(eps_mod).all_pass());

    ModuleAlgebra trivial_carrier{eps_mod, H.mult_table(), H.unit()};
    REQUIRE(check_module_algebra(trivial_carrier).all_pass());

    // one-dimensional carrier with the counit action
    HomModule k_mod = trivial_module(H);
    ModuleAlgebra k_carrier{k_mod, {Vec{Rational(1)}}, Vec{Rational(1)}};
    REQUIRE(check_module_algebra(k_carrier).all_pass());

    // the regular action is not multiplicative on a noncommutative carrier
    ModuleAlgebra regular_carrier{regular_module(H), H.mult_table(), H.unit()};
    auto rep = check_module_algebra(regular_carrier);
    REQUIRE_FALSE(rep.all_pass());
    REQUIRE_FALSE(rep.first_failure()->counterexample.empty());
}

TEST_CASE("module coalgebra: trivial action passes, counit compatibility detects tampering") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    std::vector<SparseVec> act;
    for (int h = 0; h < 4; ++h)
        for (int m = 0; m < 4; ++m) {
            SparseVec col;
            if (!is_zero(H.counit_row()[h])) {
                col.add_scaled(SparseVec::from_dense(H.alpha_pow(1).apply(basis_vec(4, m))), H.counit_row()[h]);
            }
            act.push_back(col);
        }
    HomModule eps_mod(&H, 4, std::move(act), H.alpha());
    ModuleCoalgebra carrier{eps_mod, H.comult_table(), H.counit_row()};
    REQUIRE(check_module_coalgebra(carrier).all_pass());

    // regular action is not comultiplicative here
    ModuleCoalgebra regular_carrier{regular_module(H), H.comult_table(), H.counit_row()};
    REQUIRE_FALSE(check_module_coalgebra(regular_carrier).all_pass());
}

TEST_CASE("monoidal coalgebra laws demand an invertible structure map") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    // a plain-flavor structure with singular alpha cannot be probed monoidally
    Matrix singular(2, 2);
    singular.at(0, 0) = Rational(1);
    singular.at(0, 1) = Rational(1);
    REQUIRE_THROWS_AS(HomBialgebra(2, z2.classical.basis_names(), z2.classical.mult_table(),
                                   z2.classical.unit(), z2.classical.comult_table(),
                                   z2.classical.counit_row(), singular, std::nullopt, Flavor::monoidal, 8),
                      PreconditionError);
}
