#include <random>

#include "doctest.h"

#include "bethe/linalg.hpp"

using namespace bethe;

namespace {

RationalVector multiply(const RationalMatrix& M, const RationalVector& x) {
    RationalVector out(M.size(), Rational(0));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += M[i][j] * x[j];
    return out;
}

}  // namespace

TEST_CASE("identity system") {
    RationalMatrix M = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    RationalVector b = {Rational(3), Rational(-1, 2)};
    auto sol = solve_affine_linear(M, b);
    REQUIRE(sol);
    CHECK(sol->particular == b);
    CHECK(sol->null_basis.empty());
}

TEST_CASE("zero system has full null space") {
    RationalMatrix M = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
    RationalVector b = {Rational(0), Rational(0)};
    auto sol = solve_affine_linear(M, b);
    REQUIRE(sol);
    CHECK(sol->particular == RationalVector{Rational(0), Rational(0)});
    CHECK(sol->null_basis.size() == 2);
}

TEST_CASE("underdetermined x + y = 1") {
    RationalMatrix M = {{Rational(1), Rational(1)}};
    RationalVector b = {Rational(1)};
    auto sol = solve_affine_linear(M, b);
    REQUIRE(sol);
    CHECK(sol->particular == RationalVector{Rational(1), Rational(0)});
    REQUIRE(sol->null_basis.size() == 1);
    // The null line is spanned by (1, -1) up to sign.
    CHECK(sol->null_basis[0][0] == -sol->null_basis[0][1]);
    CHECK_FALSE(sol->null_basis[0][0].is_zero());
}

TEST_CASE("inconsistent system") {
    RationalMatrix M = {{Rational(1)}, {Rational(1)}};
    RationalVector b = {Rational(1), Rational(2)};
    CHECK_FALSE(solve_affine_linear(M, b));
}

TEST_CASE("random systems verified by multiplication") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> entry(-3, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t rows = static_cast<size_t>(dim(rng));
        const size_t cols = static_cast<size_t>(dim(rng));
        RationalMatrix M(rows, RationalVector(cols));
        for (auto& row : M)
            for (auto& v : row) v = Rational(entry(rng), 2);
        RationalVector b(rows);
        for (auto& v : b) v = Rational(entry(rng));

        auto sol = solve_affine_linear(M, b);
        if (!sol) continue;
        CHECK(multiply(M, sol->particular) == b);
        for (const auto& v : sol->null_basis)
            CHECK(multiply(M, v) == RationalVector(rows, Rational(0)));
    }
}
