#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "hilbstab/errors.hpp"

namespace hilbstab {

// All arithmetic in this project is exact. Rational is an arbitrary-precision
// fraction kept in lowest terms by the backend; there is no floating point
// anywhere in the computation path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;

inline Int rational_num(const Rational& q) { return numerator(q); }
inline Int rational_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// floor(q) as an exact integer (round toward minus infinity).
inline Int floor_rational(const Rational& q) {
    Int n = numerator(q), d = denominator(q); // d > 0 by invariant
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

// "p" or "p/q". This is the textual form used in surface files and reports.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Strict parse of "p" or "p/q" (q > 0 after sign normalization). Anything
// else, including float syntax, is rejected.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&](const std::string& why) {
        return input_error("bad rational '" + text + "': " + why);
    };
    if (text.empty()) throw bad("empty");
    auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> Int {
        if (part.empty()) throw bad("empty integer part");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad("sign without digits");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad("non-digit character");
        return Int(part);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad("zero denominator");
    return Rational(num, den);
}

} // namespace hilbstab
