#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexiepist {

// Exact arbitrary-precision rational. cpp_rational keeps values in lowest
// terms with a positive denominator, so the representation invariants hold
// for free and every arithmetic operation is exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Accepts "p", "-p" or "p/q" with arbitrary-precision integer parts.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

}  // namespace lexiepist
