#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/algebra.hpp"
#include "homalg/matrix.hpp"

#include <random>

using namespace homalg;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix M(F, r, c);
    std::uniform_int_distribution<int> d(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M.set(i, j, F.of_int(d(rng)));
    return M;
}

} // namespace

TEST_CASE("kernel of identity is empty") {
    Field F = Field::rationals();
    auto K = kernel_basis(Matrix::identity(F, 2));
    CHECK(K.empty());
}

TEST_CASE("kernel of [1 1] over Q") {
    Field F = Field::rationals();
    Matrix A(F, 1, 2);
    A.set(0, 0, F.one());
    A.set(0, 1, F.one());
    auto K = kernel_basis(A);
    REQUIRE(K.size() == 1);
    // normalized so the free coordinate is 1: (-1, 1); spans the same line
    // as (1, -1)
    CHECK(F.mul(K[0][0], F.of_int(-1)) == K[0][1]);
}

TEST_CASE("rank-nullity on random matrices, both fields") {
    std::mt19937_64 rng(12345);
    for (Field F : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix A = random_matrix(F, 5, 7, rng);
            auto K = kernel_basis(A);
            CHECK(rank(A) + K.size() == 7);
            for (const auto& x : K)
                CHECK(vec_is_zero(A.apply_col(x)));
        }
    }
}

TEST_CASE("solve_linear identity and zero cases") {
    Field F = Field::rationals();
    Vec b{Scalar(3), Scalar(-2)};
    auto sol = solve_linear(Matrix::identity(F, 2), b);
    REQUIRE(sol);
    CHECK(sol->first == b);
    CHECK(sol->second.empty());

    Matrix Z(F, 2, 2);
    auto sol2 = solve_linear(Z, Vec{Scalar(0), Scalar(0)});
    REQUIRE(sol2);
    CHECK(vec_is_zero(sol2->first));
    CHECK(sol2->second.size() == 2);
}

TEST_CASE("inconsistent overdetermined system") {
    Field F = Field::rationals();
    Matrix A(F, 2, 1);
    A.set(0, 0, F.one());
    A.set(1, 0, F.one());
    CHECK(!solve_linear(A, Vec{Scalar(1), Scalar(2)}));
}

TEST_CASE("rank examples") {
    Field F = Field::rationals();
    Matrix Z(F, 3, 3);
    CHECK(rank(Z) == 0);
    CHECK(rank(Matrix::identity(F, 4)) == 4);
    Matrix P(F, 2, 2);
    P.set(0, 0, F.of_int(1));
    P.set(0, 1, F.of_int(2));
    P.set(1, 0, F.of_int(2));
    P.set(1, 1, F.of_int(4));
    CHECK(rank(P) == 1);
}

TEST_CASE("solutions verified by exact multiplication") {
    std::mt19937_64 rng(999);
    Field F = Field::prime(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix A = random_matrix(F, 4, 6, rng);
        Vec x(6);
        std::uniform_int_distribution<int> d(-4, 4);
        for (auto& c : x)
            c = F.of_int(d(rng));
        Vec b = A.apply_col(x);
        auto sol = solve_linear(A, b);
        REQUIRE(sol);
        CHECK(A.apply_col(sol->first) == b);
    }
}

TEST_CASE("RowSpan membership and reduction") {
    Field F = Field::rationals();
    RowSpan S(F, 3);
    S.add(Vec{Scalar(1), Scalar(1), Scalar(0)});
    S.add(Vec{Scalar(0), Scalar(1), Scalar(1)});
    CHECK(S.dim() == 2);
    CHECK(S.contains(Vec{Scalar(1), Scalar(2), Scalar(1)}));
    CHECK(!S.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
    auto co = S.coordinates(Vec{Scalar(2), Scalar(3), Scalar(1)});
    REQUIRE(co);
}
