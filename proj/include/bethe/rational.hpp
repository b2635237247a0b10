#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bethe {

/*
 * Exact rational scalar, the coefficient field for the whole library.
 * Always kept in lowest terms with a positive denominator; arithmetic
 * never rounds. Backed by GMP.
 *
 * Serialized form is "p/q", or just "p" when q = 1.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(mpz_class(n)) {}
    Rational(long long n) : v_(mpz_class(static_cast<long>(n))) {
        static_assert(sizeof(long long) == sizeof(long), "LP64 assumed");
    }

    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" and "p/q" with optional sign; rejects anything else (no decimals).
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
        if (v.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in \"" + s + "\"");
        v.canonicalize();
        return Rational(wrap_tag{}, std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(wrap_tag{}, mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(wrap_tag{}, mpq_class(::abs(v_))); }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(wrap_tag{}, std::move(r));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct wrap_tag {};
    Rational(wrap_tag, mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // canonical: lowest terms, positive denominator
};

}  // namespace bethe
