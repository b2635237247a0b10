#include "bethe/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bethe {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (power < 0) throw std::invalid_argument("Polynomial::monomial: negative power");
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p(Rational(1));
    for (const Rational& r : roots) p = p * Polynomial({-r, Rational(1)});
    return p;
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    Polynomial r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = Rational(static_cast<long long>(k)) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: cannot normalize the zero polynomial");
    return leading_coefficient().reciprocal() * *this;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coefficient(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k >= 1) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Polynomial shift(const Polynomial& f, const Rational& c) {
    if (f.is_zero() || c.is_zero()) return f;
    // Horner in (x + c): result = (...((a_n)(x+c) + a_{n-1})(x+c) + ...) + a_0.
    Polynomial result;
    const Polynomial x_plus_c({c, Rational(1)});
    for (int k = f.degree(); k >= 0; --k) {
        result = result * x_plus_c;
        result += Polynomial(f.coefficient(k));
    }
    return result;
}

Polynomial discrete_wronskian(const Polynomial& f, const Polynomial& g, const Rational& step) {
    return shift(f, step) * g - f * shift(g, step);
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    Polynomial q;
    Polynomial r = f;
    const Rational lc_inv = d.leading_coefficient().reciprocal();
    const int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        Rational c = r.leading_coefficient() * lc_inv;
        int k = r.degree() - dd;
        Polynomial term = Polynomial::monomial(c, k);
        q += term;
        r -= term * d;
    }
    return {std::move(q), std::move(r)};
}

bool divides(const Polynomial& d, const Polynomial& f) {
    if (d.is_zero()) throw std::domain_error("divides: zero divisor");
    return divmod(f, d).second.is_zero();
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd: both arguments are zero");
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.monic();
    }
    return a.monic();
}

bool has_multiple_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("has_multiple_roots: zero polynomial");
    if (f.is_constant()) return false;
    return gcd(f, f.derivative()).degree() > 0;
}

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1 << 16;
        std::vector<bool> sieve(limit, true);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p < limit; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q < limit; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

/*
 * Positive divisors of |n| from its small-prime factorization (primes
 * below 2^16); a residual cofactor is kept as a single atom, so divisors
 * that split it further are missed, and the divisor count is capped.
 * rational_roots stays honest either way: completeness is certified
 * structurally, never assumed from the candidate list.
 */
std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = ::abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    for (unsigned long p : small_primes()) {
        if (a == 1) break;
        if (!mpz_divisible_ui_p(a.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
            ++e;
        }
        factors.emplace_back(mpz_class(p), e);
    }
    if (a > 1) factors.emplace_back(a, 1);

    constexpr size_t divisor_cap = 4096;
    std::vector<mpz_class> divisors{1};
    for (const auto& [p, e] : factors) {
        const size_t base = divisors.size();
        mpz_class power = 1;
        for (int k = 0; k < e && divisors.size() < divisor_cap; ++k) {
            power *= p;
            for (size_t d = 0; d < base && divisors.size() < divisor_cap; ++d)
                divisors.push_back(divisors[d] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");

    RationalRoots result;
    Polynomial work = f;

    // Peel off the root at zero first so the constant term is nonzero.
    int zero_mult = 0;
    while (!work.is_constant() && work.coefficient(0).is_zero()) {
        auto c = work.coefficients();
        work = Polynomial(std::vector<Rational>(c.begin() + 1, c.end()));
        ++zero_mult;
    }
    if (zero_mult > 0) result.roots.emplace_back(Rational(0), zero_mult);

    if (!work.is_constant()) {
        // Clear denominators to a primitive integer polynomial; candidate
        // roots p/q then satisfy p | a_0 and q | a_n.
        mpz_class den_lcm = 1;
        for (const Rational& c : work.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> zc;
        zc.reserve(work.coefficients().size());
        mpz_class content = 0;
        for (const Rational& c : work.coefficients()) {
            mpz_class v = c.numerator() * (den_lcm / c.denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
            zc.push_back(v);
        }
        for (auto& v : zc) v /= content;

        std::vector<Rational> candidates;
        for (const mpz_class& p : positive_divisors(zc.front()))
            for (const mpz_class& q : positive_divisors(zc.back())) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                candidates.push_back(Rational(mpq_class(p, q)));
                candidates.push_back(Rational(mpq_class(mpz_class(-p), q)));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const Rational& cand : candidates) {
            int mult = 0;
            while (!work.is_constant() && work(cand).is_zero()) {
                work = divmod(work, Polynomial({-cand, Rational(1)})).first;
                ++mult;
            }
            if (mult > 0) result.roots.emplace_back(cand, mult);
        }
    }

    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Structural completeness check: lc * prod (x - r)^m == f.
    Polynomial product(f.leading_coefficient());
    for (const auto& [root, mult] : result.roots)
        for (int k = 0; k < mult; ++k) product = product * Polynomial({-root, Rational(1)});
    result.complete = (product == f);
    return result;
}

ProjectivePolynomial::ProjectivePolynomial(const Polynomial& p) : poly_(p.monic()) {}

}  // namespace bethe
