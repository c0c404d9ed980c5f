#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace elocc {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as they are built through
// the helpers below; comparisons and arithmetic are exact.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "3", "-7", "3/4" and exact decimals such as "0.25" or "-1.375".
Rational parse_rational(std::string_view text);

// Always "p/q", including "3/1"; lossless and parseable by parse_rational.
std::string to_fraction(const Rational& q);

// Human form: "p/q" plus a decimal approximation, e.g. "4/5 (0.8)".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

Rational pow_rational(const Rational& base, unsigned long exp);

}  // namespace elocc
