#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "thompson/config.hpp"

namespace thompson {

using Integer = boost::multiprecision::cpp_int;

// Exact rationals, always stored in lowest terms with positive denominator.
using Fraction = boost::multiprecision::cpp_rational;

inline Integer pow2(std::size_t k) { return Integer(1) << k; }

inline Fraction frac(const Integer& num, const Integer& den) {
    return Fraction(num, den);
}

// True when x = m / 2^k, i.e. the denominator in lowest terms is a power of 2.
inline bool is_dyadic(const Fraction& x) {
    Integer d = denominator(x);
    return (d & (d - 1)) == 0;
}

inline bool is_integer(const Fraction& x) { return denominator(x) == 1; }

inline std::string fraction_to_string(const Fraction& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("fraction with zero denominator: " + text);
        return Fraction(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed fraction: " + text);
    }
}

}  // namespace thompson
