#include <numeric>

#include "doctest.h"

#include "bethe/cartan.hpp"

using namespace bethe;

TEST_CASE("symmetrizer for rank one and the classical rank-two types") {
    CHECK(build_cartan({{2}}).symmetrizer() == std::vector<long long>{1});
    CHECK(build_cartan({{2, -1}, {-1, 2}}).symmetrizer() == std::vector<long long>{1, 1});
    CHECK(build_cartan({{2, -1}, {-2, 2}}).symmetrizer() == std::vector<long long>{2, 1});
    CHECK(build_cartan({{2, -1}, {-3, 2}}).symmetrizer() == std::vector<long long>{3, 1});
    CHECK(build_cartan({{2, -2}, {-2, 2}}).symmetrizer() == std::vector<long long>{1, 1});
}

TEST_CASE("generalized-Cartan axioms are enforced") {
    CHECK_THROWS_AS(build_cartan({{1}}), NotGeneralizedCartanError);
    CHECK_THROWS_AS(build_cartan({{2, 1}, {1, 2}}), NotGeneralizedCartanError);
    CHECK_THROWS_AS(build_cartan({{2, 0}, {-1, 2}}), NotGeneralizedCartanError);
    CHECK_THROWS_AS(build_cartan({{2, -1}}), NotGeneralizedCartanError);
    CHECK_THROWS_AS(build_cartan(std::vector<std::vector<long long>>{}), NotGeneralizedCartanError);
}

TEST_CASE("inconsistent ratio cycle is rejected as non-symmetrizable") {
    // Edges force d2 = d1/2, d3 = d2/2, but the 1-3 edge wants d3 = d1.
    CHECK_THROWS_AS(build_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -2, 2}}), NotSymmetrizableError);
}

TEST_CASE("DA symmetric, entries positive and globally coprime") {
    const std::vector<std::vector<std::vector<long long>>> matrices = {
        {{2, -1}, {-1, 2}},
        {{2, -1}, {-2, 2}},
        {{2, -1}, {-3, 2}},
        {{2, -2}, {-2, 2}},
        // Disconnected: A1 block next to a B2 block.
        {{2, 0, 0}, {0, 2, -1}, {0, -2, 2}},
        // A3 chain.
        {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
    };
    for (const auto& A : matrices) {
        CartanData c = build_cartan(A);
        long long g = 0;
        for (int i = 0; i < c.rank(); ++i) {
            CHECK(c.d(i) > 0);
            g = std::gcd(g, c.d(i));
            for (int j = 0; j < c.rank(); ++j) CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
        }
        CHECK(g == 1);
    }
    // Per-component normalization: the B2 block keeps (2,1) next to the A1 block.
    CartanData mixed = build_cartan({{2, 0, 0}, {0, 2, -1}, {0, -2, 2}});
    CHECK(mixed.symmetrizer() == std::vector<long long>{1, 2, 1});
}

TEST_CASE("derived pairings and steps") {
    CartanData b2 = build_cartan({{2, -1}, {-2, 2}});
    CHECK(b2.bilinear(0, 0) == 4);   // (a_1, a_1) = 2 d_1
    CHECK(b2.bilinear(0, 1) == -2);  // d_1 a_12
    CHECK(b2.bilinear(1, 0) == -2);  // symmetric
    CHECK(b2.step(0, Rational(1, 2)) == Rational(2));
    CHECK(b2.step(1, Rational(1, 2)) == Rational(1));
}
