#include "lorentz/sqrt_compare.hpp"

#include <stdexcept>

namespace lorentz {

Integer ceil_of_scaled_sqrt(const Rational& c, const Integer& m) {
  if (sgn(c) < 0) throw std::domain_error("ceil_of_scaled_sqrt: negative argument");
  if (sgn(m) <= 0) throw std::domain_error("ceil_of_scaled_sqrt: scale must be positive");
  const Rational target = c * Rational(m * m);  // want least t with t^2 >= target
  const Integer& p = target.get_num();
  const Integer& q = target.get_den();
  Integer floor_quot = p / q;
  Integer t;
  mpz_sqrt(t.get_mpz_t(), floor_quot.get_mpz_t());
  while (t * t * q < p) ++t;
  return t;
}

std::strong_ordering compare_to_sqrt(const Rational& r, const Rational& c) {
  if (sgn(c) < 0) throw std::domain_error("compare_to_sqrt: negative radicand");
  if (sgn(r) < 0) return std::strong_ordering::less;
  const Rational r2 = r * r;
  const int s = cmp(r2, c);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int sign_of_sqrt_affine(const Rational& a, const Rational& b, const Rational& s) {
  if (sgn(s) < 0) throw std::domain_error("sign_of_sqrt_affine: negative radicand");
  const int sa = sgn(s) == 0 ? 0 : sgn(a);
  const int sb = sgn(b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare |a| sqrt(s) with |b|, i.e. a^2 s with b^2.
  const int c = cmp(Rational(a * a * s), Rational(b * b));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

}  // namespace lorentz
