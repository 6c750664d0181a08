#include "coxline/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "coxline/errors.hpp"

namespace coxline {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw Error("malformed rational literal: '" + std::string(text) + "'");
    Rational r;
    r.value_ = mpq_class(mpz_class(std::string(num)), mpz_class(std::string(den)));
    if (r.value_.get_den() == 0) throw Error("rational with zero denominator");
    r.value_.canonicalize();
    return r;
}

long long Rational::to_int() const {
    if (!is_integer()) throw Error("rational " + str() + " is not an integer");
    return numerator_ll();
}

long long Rational::numerator_ll() const {
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw Error("numerator out of range: " + str());
    return n.get_si();
}

long long Rational::denominator_ll() const {
    const mpz_class& d = value_.get_den();
    if (!d.fits_slong_p()) throw Error("denominator out of range: " + str());
    return d.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace coxline
