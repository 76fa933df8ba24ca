#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace klrw {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Comma separated list, e.g. "1/2,-3/2".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join_rationals(const std::vector<Rational>& values, std::string_view sep = ",");

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace klrw
