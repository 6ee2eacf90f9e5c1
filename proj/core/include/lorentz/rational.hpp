#ifndef LORENTZ_RATIONAL_HPP
#define LORENTZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

// Canonical arbitrary-precision rational (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

std::string to_string(const RationalVector& v);

double to_double(const Rational& r);

// 10^exponent for any integer exponent.
Rational power_of_ten(int exponent);

}  // namespace lorentz

#endif  // LORENTZ_RATIONAL_HPP
