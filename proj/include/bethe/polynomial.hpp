#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/*
 * Exact univariate polynomial over Rational.
 *
 * Coefficients are stored in ascending degree order with no trailing
 * zeros, so the degree is always well defined. The zero polynomial is
 * the empty coefficient list; its degree is the sentinel kNegInfDegree
 * (minus infinity), never -1. Callers branch on is_zero() before doing
 * degree arithmetic.
 */
class Polynomial {
  public:
    static constexpr int kNegInfDegree = INT_MIN;

    Polynomial() = default;                      // zero polynomial
    Polynomial(const Rational& constant);        // constant polynomial
    explicit Polynomial(std::vector<Rational> coeffs);  // ascending order, trimmed

    static Polynomial monomial(const Rational& c, int power);
    static Polynomial from_roots(const std::vector<Rational>& roots);  // monic product of (x - r)

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Coefficient of x^k; zero outside the stored range.
    Rational coefficient(int k) const;
    const Rational& leading_coefficient() const;  // throws on zero polynomial

    Rational operator()(const Rational& x) const;  // Horner evaluation

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const;
    Polynomial monic() const;  // throws on zero polynomial

    std::string str() const;  // human-readable, e.g. "x^2 - 1"

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// f(x + c), exact Taylor shift.
Polynomial shift(const Polynomial& f, const Rational& c);

// f(x+step)*g(x) - f(x)*g(x+step).
Polynomial discrete_wronskian(const Polynomial& f, const Polynomial& g, const Rational& step);

// Euclidean division: f = q*d + r with deg r < deg d. d must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& d);

// true iff d divides f exactly. d must be nonzero; every d divides 0.
bool divides(const Polynomial& d, const Polynomial& f);

// Monic greatest common divisor (Euclidean scheme over Q, each remainder
// renormalized monic). Rejects gcd(0, 0).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// true iff gcd(f, f') is nonconstant. f must be nonzero.
bool has_multiple_roots(const Polynomial& f);

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), sorted ascending
    // complete == the product of the extracted linear factors (times the
    // leading coefficient) equals f, i.e. f splits over Q.
    bool complete = false;
};

// All rational roots of f with multiplicities, by exact factor extraction.
// f must be nonzero.
RationalRoots rational_roots(const Polynomial& f);

/*
 * A nonzero polynomial considered up to scalar, stored as its monic
 * representative. Equality is coefficient-exact equality of the
 * representatives.
 */
class ProjectivePolynomial {
  public:
    ProjectivePolynomial() : poly_(Rational(1)) {}  // the constant 1
    explicit ProjectivePolynomial(const Polynomial& p);

    const Polynomial& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }

    friend bool operator==(const ProjectivePolynomial& a, const ProjectivePolynomial& b) {
        return a.poly_ == b.poly_;
    }
    friend bool operator!=(const ProjectivePolynomial& a, const ProjectivePolynomial& b) {
        return !(a == b);
    }

  private:
    Polynomial poly_;  // monic
};

}  // namespace bethe
