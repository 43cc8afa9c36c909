#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

#include "hodgekit/error.hpp"

namespace hodgekit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. boost::rational keeps the value reduced with a
/// positive denominator, so equality is structural.
using Rational = boost::rational<BigInt>;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline bool is_zero(const Rational& r) { return r.numerator() == 0; }

inline Rational pow_rational(const Rational& base, long long e) {
    if (e == 0) return rat(1);
    if (e < 0) {
        if (is_zero(base)) throw RangeError("pow_rational: negative power of zero");
        return pow_rational(Rational(base.denominator(), base.numerator()), -e);
    }
    Rational acc = rat(1);
    Rational b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

/// Renders as "num/den" with decimal integers, e.g. "-3/2", "5/1".
inline std::string to_fraction_string(const Rational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

/// Accepts "num/den" or a bare integer "num".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("parse_rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("parse_rational: malformed rational '" + s + "'");
    }
}

} // namespace hodgekit
