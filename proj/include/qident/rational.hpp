#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qident/errors.hpp"

namespace qident {

// Exact arbitrary-precision rational, the base field of every computation.
// Thin value wrapper over GMP's mpq_class pinning the canonical form
// (denominator >= 1, gcd(|num|, den) = 1, zero is 0/1) and the "num/den"
// serialization used in reports.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_((long)n) {}         // NOLINT(google-explicit-constructor)
    Rational(int n) : v_((long)n) {}          // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw singular_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num/den" or a bare integer.
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw usage_error("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw singular_error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw singular_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw singular_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Integer power, negative exponents via the inverse.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), (unsigned long)e);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), (unsigned long)e);
        return Rational(mpq_class(num, den));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // Canonical text form, always with an explicit denominator: "3/1", "-2/7".
    std::string str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace qident
