#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "homtwist/homtwist.hpp"

using namespace homtwist;

namespace {

// left multiplication by sigma in the componentwise product on H (x) H,
// materialized as a dim^2 x dim^2 matrix
Matrix left_mult_matrix(const HomBialgebra& H, const Tensor2& sigma) {
    const int d = H.dim(), n = d * d;
    Matrix L(n, n);
    for (const auto& [k, c] : sigma.coeffs())
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Vec& p1 = H.prod(k[0], i);
                const Vec& p2 = H.prod(k[1], j);
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        if (!is_zero(p1[a]) && !is_zero(p2[b])) L.at(a * d + b, i * d + j) += c * p1[a] * p2[b];
            }
    return L;
}

}  // namespace

TEST_CASE("identity system returns the right-hand side") {
    Matrix I = Matrix::identity(4);
    Vec b{rational(3), rational(-1, 2), rational(0), rational(7, 3)};
    auto sol = solve_linear(I, b);
    REQUIRE(sol.status == SolveStatus::unique);
    REQUIRE(sol.x == b);
}

TEST_CASE("zero map with nonzero rhs has no solution") {
    Matrix Z(3, 3);
    auto sol = solve_linear(Z, basis_vec(3, 1));
    REQUIRE(sol.status == SolveStatus::no_solution);
    auto hom = solve_linear(Z, Vec(3, Rational(0)));
    REQUIRE(hom.status == SolveStatus::non_unique);
}

TEST_CASE("left multiplication by the bicharacter twist inverts to itself") {
    // sigma_beta is its own inverse under the componentwise product, so
    // solving L x = 1 (x) 1 must recover its own coefficients.
    NamedInstance z2 = instance_group_algebra(2, 1);
    Tensor2 sb = z2.twists[1].sigma;
    REQUIRE(z2.twists[1].name == "sigma_beta");

    // independent oracle: sigma_beta * sigma_beta = 1 (x) 1 by full expansion
    Tensor2 square = hom_product(z2.monoidal, sb, sb);
    REQUIRE(square == unit_tensor2(z2.monoidal));

    Matrix L = left_mult_matrix(z2.monoidal, sb);
    Vec target(4, Rational(0));
    target[0] = Rational(1);  // coordinates of 1 (x) 1 in the flat basis
    auto sol = solve_linear(L, target);
    REQUIRE(sol.status == SolveStatus::unique);
    Vec expect(4, Rational(0));
    for (const auto& [k, v] : sb.coeffs()) expect[k[0] * 2 + k[1]] = v;
    REQUIRE(sol.x == expect);
}

TEST_CASE("solving then applying reproduces the right-hand side") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        Matrix M(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) M.at(r, c) = rational(entry(rng), 1 + static_cast<long long>(rng() % 3));
        Vec b(n);
        for (int r = 0; r < n; ++r) b[r] = rational(entry(rng));
        auto sol = solve_linear(M, b);
        if (sol.status == SolveStatus::unique) {
            REQUIRE(M.apply(sol.x) == b);
        } else if (sol.status == SolveStatus::non_unique) {
            auto basis = nullspace(M);
            REQUIRE_FALSE(basis.empty());
            for (const auto& v : basis) REQUIRE(is_zero_vec(M.apply(v)));
        }
    }
}

TEST_CASE("nullspace spans exactly the kernel") {
    Matrix M(2, 3);
    M.at(0, 0) = Rational(1);
    M.at(0, 1) = Rational(2);
    M.at(1, 2) = Rational(1);
    auto basis = nullspace(M);
    REQUIRE(basis.size() == 1);
    REQUIRE(is_zero_vec(M.apply(basis[0])));
    REQUIRE_FALSE(is_zero_vec(basis[0]));
}

TEST_CASE("inverse round trips and rejects singular input") {
    Matrix M(3, 3);
    M.at(0, 0) = rational(1, 2);
    M.at(0, 2) = Rational(3);
    M.at(1, 1) = Rational(-1);
    M.at(2, 0) = Rational(1);
    auto inv = inverse(M);
    REQUIRE(inv.has_value());
    REQUIRE(*inv * M == Matrix::identity(3));
    REQUIRE(M * *inv == Matrix::identity(3));

    Matrix S(2, 2);
    S.at(0, 0) = Rational(1);
    S.at(1, 0) = Rational(1);
    REQUIRE_FALSE(inverse(S).has_value());
}
