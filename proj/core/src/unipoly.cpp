#include "lorentz/unipoly.hpp"

#include <stdexcept>

namespace lorentz {

UniPoly::UniPoly(RationalVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(RationalVector{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
  RationalVector v(power + 1);
  v[power] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

int UniPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RationalVector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      t = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += t;
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += lorentz::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  RationalVector rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  RationalVector quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  Rational t;
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    const Rational factor = top / lb;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      t = factor * b.coefficients()[static_cast<std::size_t>(j)];
      rem[static_cast<std::size_t>(k - db + j)] -= t;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer content = 0;
  RationalVector scaled;
  scaled.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rational s = c * den_lcm;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
    scaled.push_back(std::move(s));
  }
  for (auto& c : scaled) c /= content;
  return UniPoly(std::move(scaled));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = primitive_part(a);
  UniPoly y = primitive_part(b);
  while (!y.is_zero()) {
    UniPoly r = primitive_part(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  UniPoly s = divmod(p, g).first;
  return s * (Rational(1) / s.leading());
}

}  // namespace lorentz
