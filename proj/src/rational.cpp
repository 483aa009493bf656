#include "lexiepist/rational.hpp"

#include <cctype>

namespace lexiepist {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return Rational(BigInt(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lexiepist
