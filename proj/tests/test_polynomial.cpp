#include <random>

#include "doctest.h"

#include "bethe/polynomial.hpp"

using namespace bethe;

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

Polynomial poly(std::initializer_list<Rational> ascending) {
    return Polynomial(std::vector<Rational>(ascending));
}

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> num(-4, 4);
    std::uniform_int_distribution<long long> den(1, 3);
    std::vector<Rational> coeffs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : coeffs) c = Rational(num(rng), den(rng));
    if (coeffs.back().is_zero()) coeffs.back() = Rational(1);
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(5, 1).str() == "5");
    CHECK(Rational::from_string("7/3") == Rational(7, 3));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
}

TEST_CASE("zero polynomial has the minus-infinity degree sentinel") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == Polynomial::kNegInfDegree);
    CHECK(Polynomial(q(0)).is_zero());
    CHECK(poly({q(3)}).degree() == 0);
    CHECK(poly({q(0), q(1)}).degree() == 1);
}

TEST_CASE("shift: identity, binomial expansion, composition law") {
    const Polynomial x2 = poly({q(0), q(0), q(1)});
    CHECK(shift(x2, q(0)) == x2);
    CHECK(shift(x2, q(1)) == poly({q(1), q(2), q(1)}));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(rng, 5);
        Rational a(num(rng), 2), b(num(rng), 3);
        CHECK(shift(shift(f, a), b) == shift(f, a + b));
        CHECK(shift(f, a).degree() == f.degree());
    }
}

TEST_CASE("discrete wronskian: diagonal, base case, degree drop") {
    std::mt19937_64 rng(11);
    const Rational s(1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(rng, 4);
        CHECK(discrete_wronskian(f, f, s).is_zero());
    }
    CHECK(discrete_wronskian(poly({q(0), q(1)}), Polynomial(q(1)), s) == Polynomial(s));

    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(rng, 4);
        Polynomial g = random_poly(rng, 4);
        if (f.is_constant() || g.is_constant()) continue;
        Polynomial w = discrete_wronskian(f, g, s);
        if (!w.is_zero()) CHECK(w.degree() <= f.degree() + g.degree() - 1);
    }
}

TEST_CASE("discrete wronskian is antisymmetric and bilinear") {
    std::mt19937_64 rng(13);
    const Rational s(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(rng, 4);
        Polynomial g = random_poly(rng, 4);
        Rational a(trial % 5 - 2), b(trial % 3 + 1);
        CHECK(discrete_wronskian(f, g, s) == -discrete_wronskian(g, f, s));
        Polynomial combo = a * f + b * g;
        CHECK(discrete_wronskian(f, combo, s) == b * discrete_wronskian(f, g, s));
    }
}

TEST_CASE("gcd: shared factor, zero argument, coprime") {
    const Polynomial x2m1 = poly({q(-1), q(0), q(1)});
    const Polynomial xm1 = poly({q(-1), q(1)});
    CHECK(gcd(x2m1, xm1) == xm1);
    CHECK(gcd(Polynomial(), q(3) * x2m1) == x2m1);  // gcd(0, f) = monic(f)
    CHECK(gcd(q(3) * x2m1, Polynomial()) == x2m1);
    CHECK(gcd(poly({q(1), q(0), q(1)}), x2m1) == Polynomial(q(1)));
    CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), std::domain_error);
}

TEST_CASE("multiple-root detection via gcd with the derivative") {
    CHECK_FALSE(has_multiple_roots(poly({q(-1), q(0), q(1)})));
    CHECK(has_multiple_roots(poly({q(0), q(0), q(1)})));
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    CHECK(has_multiple_roots(poly({q(2), q(-3), q(0), q(1)})));
    CHECK_FALSE(has_multiple_roots(Polynomial(q(5))));
    CHECK_THROWS_AS(has_multiple_roots(Polynomial()), std::domain_error);
}

TEST_CASE("divides: examples and agreement with independently built remainders") {
    const Polynomial xm1 = poly({q(-1), q(1)});
    CHECK(divides(xm1, poly({q(-1), q(0), q(1)})));
    CHECK_FALSE(divides(xm1, poly({q(1), q(0), q(1)})));
    CHECK(divides(xm1, Polynomial()));
    CHECK_THROWS_AS(divides(Polynomial(), xm1), std::domain_error);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial d = random_poly(rng, 3);
        Polynomial quot = random_poly(rng, 3);
        Polynomial rem = random_poly(rng, 5);
        if (!rem.is_zero() && rem.degree() >= d.degree()) rem = divmod(rem, d).second;
        Polynomial f = quot * d + rem;
        CHECK(divides(d, f) == rem.is_zero());
    }
}

TEST_CASE("rational root extraction with completeness reporting") {
    RationalRoots r = rational_roots(poly({q(-1), q(0), q(1)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair{q(-1), 1});
    CHECK(r.roots[1] == std::pair{q(1), 1});
    CHECK(r.complete);

    r = rational_roots(poly({q(1), q(0), q(1)}));
    CHECK(r.roots.empty());
    CHECK_FALSE(r.complete);

    // x^2 (x - 1/2)
    r = rational_roots(poly({q(0), q(0), q(-1, 2), q(1)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair{q(0), 2});
    CHECK(r.roots[1] == std::pair{q(1, 2), 1});
    CHECK(r.complete);

    // Constants split trivially.
    CHECK(rational_roots(Polynomial(q(7))).complete);
    CHECK_THROWS_AS(rational_roots(Polynomial()), std::domain_error);
}

TEST_CASE("projective polynomials are stored monic") {
    ProjectivePolynomial p(q(3) * poly({q(-1), q(0), q(1)}));
    CHECK(p.poly() == poly({q(-1), q(0), q(1)}));
    CHECK(p == ProjectivePolynomial(q(-2) * poly({q(-1), q(0), q(1)})));
    CHECK_THROWS_AS(ProjectivePolynomial(Polynomial()), std::domain_error);
}
