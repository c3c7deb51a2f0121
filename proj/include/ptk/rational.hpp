#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ptk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws InputError.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Rational with denominator `den` closest to x.
Rational approximate(double x, long den);

}  // namespace ptk
