#ifndef LORENTZ_MONOMIAL_HPP
#define LORENTZ_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// Multi-index x_{v1}^{e1} ... x_{vk}^{ek}, stored sparsely as (variable,
/// exponent) pairs sorted by variable with every exponent positive.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;

  static Monomial variable(std::uint32_t var, std::uint32_t exponent = 1);
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);
  // Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(std::uint32_t var) const;
  const std::vector<Factor>& factors() const { return factors_; }
  // One past the largest variable index present (0 for the unit monomial).
  std::uint32_t variable_bound() const { return factors_.empty() ? 0 : factors_.back().first + 1; }

  std::vector<std::uint32_t> dense(std::size_t num_vars) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // "x0^2 x3^1"; empty string for the unit monomial.
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order: total degree first, then the dense exponent
// vectors compared lexicographically from x0 (so x0 > x1 > ...).
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

// All monomials of total degree `degree` in `num_vars` variables, ascending
// in graded lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

}  // namespace lorentz

#endif  // LORENTZ_MONOMIAL_HPP
