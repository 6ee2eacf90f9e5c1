#ifndef LORENTZ_UNIPOLY_HPP
#define LORENTZ_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/rational.hpp"

namespace lorentz {

/// Univariate polynomial in t with rational coefficients; coefficient i
/// multiplies t^i. The leading coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RationalVector coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalVector& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;
  int sign_at(const Rational& t) const;

  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  RationalVector coeffs_;
};

// Euclidean division a = q b + r with deg r < deg b. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), scaled to be monic. Throws on p = 0.
UniPoly square_free_part(const UniPoly& p);

// Positive rescaling to a primitive integer polynomial (content stripping).
UniPoly primitive_part(const UniPoly& p);

}  // namespace lorentz

#endif  // LORENTZ_UNIPOLY_HPP
