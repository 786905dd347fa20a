#include "sgb/rational.hpp"

#include <cctype>

namespace sgb {
namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ParseError("invalid rational coefficient '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(parse_integer(num));

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("invalid rational coefficient '" + std::string(text) + "'");
    BigInt d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& q) { return q.str(); }

} // namespace sgb
