#ifndef LORENTZ_SQRT_COMPARE_HPP
#define LORENTZ_SQRT_COMPARE_HPP

#include <compare>

#include "lorentz/rational.hpp"

namespace lorentz {

// Least integer t with t >= m * sqrt(c), decided by t^2 >= m^2 c.
// Throws std::domain_error for c < 0 or m <= 0.
Integer ceil_of_scaled_sqrt(const Rational& c, const Integer& m);

// Ordering of r against sqrt(c). Throws std::domain_error for c < 0.
std::strong_ordering compare_to_sqrt(const Rational& r, const Rational& c);

// Sign of a * sqrt(s) + b for s >= 0.
int sign_of_sqrt_affine(const Rational& a, const Rational& b, const Rational& s);

}  // namespace lorentz

#endif  // LORENTZ_SQRT_COMPARE_HPP
