#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace syzmf {

// Exact arbitrary-precision rational; always stored in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical "num/den" rendering, e.g. "-3/2", "0/1".
inline std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a/b" or a bare integer "a".
inline Rational parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(Integer(s));
    }
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in fraction '" + s + "'");
    }
    return Rational(num, den);
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Exact integer power; base must be nonzero when e < 0.
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) {
        return Rational(1);
    }
    if (base == 0) {
        if (e < 0) {
            throw std::domain_error("negative power of zero");
        }
        return Rational(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(k));
    Integer den = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(k));
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

}  // namespace syzmf
