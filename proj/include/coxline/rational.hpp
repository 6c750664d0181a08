#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coxline {

/// Exact rational scalar backed by GMP. Always kept canonical: lowest
/// terms, denominator > 0. All arithmetic and comparisons are exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long num) : value_(static_cast<long>(num)) {}
    Rational(int num) : value_(num) {}
    Rational(long long num, long long den);

    /// Parses "p" or "p/q" with an optional leading minus sign.
    static Rational from_string(std::string_view text);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Value as long long; requires an integer that fits.
    long long to_int() const;
    double to_double() const { return value_.get_d(); }

    /// Numerator/denominator as long long; throw when out of range.
    long long numerator_ll() const;
    long long denominator_ll() const;

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend Rational abs(const Rational& a) { Rational r; r.value_ = ::abs(a.value_); return r; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

}  // namespace coxline
