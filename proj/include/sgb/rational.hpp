#pragma once

#include <string>
#include <string_view>

#include "sgb/types.hpp"

namespace sgb {

/// Parses "p" or "p/q" (optional sign on p, q a positive integer) into canonical form.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

} // namespace sgb
