#include <catch2/catch_amalgamated.hpp>

#include "homtwist/homtwist.hpp"

using namespace homtwist;

namespace {

std::vector<HomModule> standard_modules(const HomBialgebra& H, std::uint64_t seed = 1) {
    return {trivial_module(H), regular_module(H), seeded_random_module(H, seed)};
}

RMatrixData validated(const HomBialgebra& H, const Tensor2& r, RMatrixSystem sys) {
    auto v = validate_rmatrix(H, r, sys);
    REQUIRE(v.rmatrix.has_value());
    return *v.rmatrix;
}

}  // namespace

TEST_CASE("tensor modules satisfy the module laws at several index pairs") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    HomModule reg = regular_module(H);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {-2, 3}, {2, -2}}) {
        RepConfig cfg{i, j, Flavor::monoidal};
        HomModule mn = tensor_module(cfg, H, reg, reg);
        REQUIRE(mn.dim() == 16);
        REQUIRE(check_hom_module(mn).all_pass());
    }
    RepConfig cfg0{0, 0, Flavor::monoidal};
    HomModule kk = tensor_module(cfg0, H, trivial_module(H), trivial_module(H));
    REQUIRE(check_hom_module(kk).all_pass());
}

TEST_CASE("unit constraints collapse to scalars when the structure map is trivial") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    RepConfig cfg{3, -2, Flavor::monoidal};
    HomModule reg = regular_module(z2.monoidal);  // alpha_M = id here
    auto uc = unit_constraints(cfg, reg);
    REQUIRE(uc.l == SparseMap::identity(2));
    REQUIRE(uc.r == SparseMap::identity(2));
}

TEST_CASE("unit constraint maps invert exactly on a scaled module") {
    NamedInstance sw = instance_sweedler(Rational(2));
    RepConfig cfg{1, -1, Flavor::monoidal};
    HomModule reg = regular_module(sw.monoidal);
    auto uc = unit_constraints(cfg, reg);
    REQUIRE(uc.l_inv.compose(uc.l) == SparseMap::identity(4));
    REQUIRE(uc.r.compose(uc.r_inv) == SparseMap::identity(4));
}

TEST_CASE("associator at the origin with identity alpha is the identity") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    RepConfig cfg{0, 0, Flavor::monoidal};
    HomModule reg = regular_module(z2.monoidal);
    auto as = associator(cfg, reg, reg, reg);
    // exponents -0+1 and 0-1 on an identity structure map
    REQUIRE(as.fwd == SparseMap::identity(8));
}

TEST_CASE("full coherence sweep on the flagship instance at mixed index pairs") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    auto modules = standard_modules(H);
    auto rm = validated(H, sw.rmatrices[0].r, RMatrixSystem::monoidal_Q);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {1, -1}, {-2, 2}}) {
        RepConfig cfg{i, j, Flavor::monoidal};
        auto rep = check_category_coherence(H, cfg, modules, &rm);
        INFO("at (" << i << "," << j << "): " << (rep.first_failure() ? rep.first_failure()->id : ""));
        REQUIRE(rep.all_pass());
    }
}

TEST_CASE("plain-flavor coherence over a twisted structure") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    auto tv = validate_twist(H, sw.twists[1].sigma);  // sigma_beta
    REQUIRE(tv.twist.has_value());
    TwistedBialgebra twisted = build_twisted_bialgebra(H, *tv.twist);
    auto rm = validated(H, sw.rmatrices[0].r, RMatrixSystem::monoidal_Q);
    auto tr = twist_rmatrix(H, *tv.twist, rm, twisted.data);

    auto modules = standard_modules(twisted.data);
    RepConfig cfg{1, 1, Flavor::plain};
    auto rep = check_category_coherence(twisted.data, cfg, modules, &tr.validated);
    INFO((rep.first_failure() ? rep.first_failure()->id : ""));
    REQUIRE(rep.all_pass());
}

TEST_CASE("braiding with the unit R-matrix and identity alpha is the flip") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    const HomBialgebra& H = z2.monoidal;
    RepConfig cfg{0, 0, Flavor::monoidal};
    HomModule reg = regular_module(H);
    SparseMap c = braiding(cfg, H, unit_tensor2(H), reg, reg);
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) REQUIRE(c.apply(SparseVec::basis(m * 2 + n)) == SparseVec::basis(n * 2 + m));
}

TEST_CASE("module morphism solver finds the structure map and only morphisms") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    HomModule reg = regular_module(H);
    auto morphisms = module_morphisms(reg, reg, 4);
    REQUIRE_FALSE(morphisms.empty());
    for (const auto& f : morphisms) REQUIRE(map_is_module_morphism(reg, reg, f));

    // no nonzero morphisms from the regular module to the trivial one... the
    // counit direction exists only when it intertwines; solved output is
    // verified either way
    auto cross = module_morphisms(reg, trivial_module(H), 4);
    for (const auto& f : cross) REQUIRE(map_is_module_morphism(reg, trivial_module(H), f));
}

TEST_CASE("seeded random modules are deterministic and valid") {
    NamedInstance sw = instance_sweedler(Rational(2));
    const HomBialgebra& H = sw.monoidal;
    HomModule a = seeded_random_module(H, 42);
    HomModule b = seeded_random_module(H, 42);
    REQUIRE(a.alpha_m() == b.alpha_m());
    for (int h = 0; h < 4; ++h)
        for (int m = 0; m < 4; ++m) REQUIRE(a.act(h, m) == b.act(h, m));
    REQUIRE(check_hom_module(a).all_pass());
    HomModule c = seeded_random_module(H, 43);
    bool differs = a.alpha_m() != c.alpha_m();
    for (int h = 0; h < 4 && !differs; ++h)
        for (int m = 0; m < 4 && !differs; ++m) differs = a.act(h, m) != c.act(h, m);
    REQUIRE(differs);
}

TEST_CASE("index-shift functor squares commute at several target pairs") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    auto modules = standard_modules(H);
    auto rm = validated(H, sw.rmatrices[0].r, RMatrixSystem::monoidal_Q);
    RepConfig from{0, 0, Flavor::monoidal};
    for (auto [ip, jp] : std::vector<std::pair<int, int>>{{0, 0}, {2, -1}, {-1, 2}}) {
        RepConfig to{ip, jp, Flavor::monoidal};
        auto rep = check_index_shift_functor(H, from, to, modules, &rm);
        INFO("to (" << ip << "," << jp << "): " << (rep.first_failure() ? rep.first_failure()->id : ""));
        REQUIRE(rep.all_pass());
    }
    REQUIRE_THROWS_AS(check_index_shift_functor(H, from, RepConfig{0, 0, Flavor::plain}, modules, nullptr),
                      PreconditionError);
}

TEST_CASE("twist functor: stated shift commutes and the probe reports it") {
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    auto tv = validate_twist(H, sw.twists[1].sigma);  // sigma_beta
    REQUIRE(tv.twist.has_value());
    TwistedBialgebra twisted = build_twisted_bialgebra(H, *tv.twist);
    auto rm = validated(H, sw.rmatrices[0].r, RMatrixSystem::monoidal_Q);
    auto tr = twist_rmatrix(H, *tv.twist, rm, twisted.data);

    auto modules = standard_modules(H);
    auto res = check_twist_functor(H, *tv.twist, twisted.data, RepConfig{0, 0, Flavor::monoidal}, modules,
                                   &rm, &tr.validated, true);
    INFO((res.report.first_failure() ? res.report.first_failure()->id : ""));
    REQUIRE(res.report.all_pass());
    REQUIRE(std::find(res.commuting_shifts.begin(), res.commuting_shifts.end(), 3) != res.commuting_shifts.end());
}

TEST_CASE("twist functor squares commute away from the origin") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    const HomBialgebra& H = z2.monoidal;
    auto tv = validate_twist(H, z2.twists[1].sigma);
    REQUIRE(tv.twist.has_value());
    TwistedBialgebra twisted = build_twisted_bialgebra(H, *tv.twist);
    auto modules = standard_modules(H);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, -2}, {-1, 1}}) {
        auto res = check_twist_functor(H, *tv.twist, twisted.data, RepConfig{i, j, Flavor::monoidal},
                                       modules, nullptr, nullptr, false);
        INFO((res.report.first_failure() ? res.report.first_failure()->id : ""));
        REQUIRE(res.report.all_pass());
    }
}
