#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "homtwist/homtwist.hpp"
#include "oracle.hpp"

using namespace homtwist;

namespace {

Tensor2 random_tensor2(int dim, std::mt19937_64& rng) {
    Tensor2 t(dim);
    std::uniform_int_distribution<long long> entry(-3, 3);
    for (int k = 0; k < dim; ++k) t.add(static_cast<int>(rng() % dim), static_cast<int>(rng() % dim), rational(entry(rng)));
    return t;
}

}  // namespace

TEST_CASE("unit times unit is the unit when alpha is the identity") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    Tensor2 u = unit_tensor2(z2.monoidal);
    REQUIRE(hom_product(z2.monoidal, u, u) == u);
}

TEST_CASE("multiplying by the unit leg applies alpha componentwise") {
    // on the scaled four-dimensional instance: (1 x 1)(x (x) x) = alpha(x) (x) alpha(x)
    NamedInstance sw = instance_sweedler(Rational(-1));
    const HomBialgebra& H = sw.monoidal;
    Tensor2 xx(4);
    xx.add(2, 2, Rational(1));
    Tensor2 lhs = hom_product(H, unit_tensor2(H), xx);
    // alpha(x) = -x, so alpha(x) (x) alpha(x) = x (x) x
    REQUIRE(lhs == xx);
    REQUIRE(lhs == alpha_image(H, xx, 1));
}

TEST_CASE("bicharacter twist squares to the unit tensor") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    const Tensor2& sb = z2.twists[1].sigma;
    // oracle: full 16-term dense expansion
    oracle::Dense expected = oracle::dense_hom_product(z2.monoidal, oracle::from_tensor2(sb), oracle::from_tensor2(sb));
    Tensor2 got = hom_product(z2.monoidal, sb, sb);
    REQUIRE(oracle::from_tensor2(got) == expected);
    REQUIRE(got == unit_tensor2(z2.monoidal));
}

TEST_CASE("rank-3 products against the dense oracle") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    const HomBialgebra& H = z2.monoidal;
    Tensor3 u = unit_tensor3(H);
    REQUIRE(hom_product(H, u, u) == u);

    // R12 * R13 for R = 1 (x) 1 collapses to the unit cube
    Tensor3 r12 = embed_12(H, unit_tensor2(H));
    Tensor3 r13 = embed_13(H, unit_tensor2(H));
    REQUIRE(hom_product(H, r12, r13) == u);
}

TEST_CASE("unit tensor acts as alpha (x) alpha on random elements") {
    NamedInstance sw = instance_sweedler(Rational(2));
    const HomBialgebra& H = sw.monoidal;
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Tensor2 t = random_tensor2(4, rng);
        REQUIRE(hom_product(H, unit_tensor2(H), t) == alpha_image(H, t, 1));
        REQUIRE(hom_product(H, t, unit_tensor2(H)) == alpha_image(H, t, 1));
    }
}

TEST_CASE("no zero coefficients are ever stored") {
    Tensor2 t(3);
    t.add(0, 0, Rational(2));
    t.add(0, 0, Rational(-2));
    REQUIRE(t.empty());
    t.add(1, 2, rational(1, 3));
    t.add(1, 2, rational(2, 3));
    REQUIRE(t.coeffs().size() == 1);
    REQUIRE(t.coeff(1, 2) == Rational(1));

    Tensor3 s(3);
    s.add(0, 1, 2, Rational(1));
    s.add(0, 1, 2, Rational(-1));
    REQUIRE(s.empty());
}

TEST_CASE("dimension mismatch is rejected") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    Tensor2 wrong(3);
    wrong.add(0, 0, Rational(1));
    REQUIRE_THROWS_AS(hom_product(z2.monoidal, wrong, wrong), DimensionMismatch);
}
