#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tdesc {

// Exact rational coefficient. Always kept canonical (gcd(p,q)=1, q>=1);
// integers are the rationals with denominator 1. No floating point.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_.canonicalize();
    }

    // Accepts "p" or "p/q".
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Rational: empty literal");
        Rational r;
        if (mpq_set_str(r.value_.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: bad literal '" + text + "'");
        if (mpz_sgn(mpq_denref(r.value_.get_mpq_t())) == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        r.value_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    mpq_class value_;
};

} // namespace tdesc
