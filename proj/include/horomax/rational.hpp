#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace horomax {

// Exact rational scalar for the tree model.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_floor(const Rational& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline Rational rational_frac(const Rational& q) {
    return q - Rational(rational_floor(q));
}

inline double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

// "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace horomax
