#ifndef LORENTZ_POLYNOMIAL_HPP
#define LORENTZ_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorentz/linear_map.hpp"
#include "lorentz/monomial.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/sym_matrix.hpp"
#include "lorentz/unipoly.hpp"

namespace lorentz {

/// Sparse multivariate polynomial over the rationals in variables
/// x0 .. x{num_vars-1}. Terms are kept in graded lexicographic order and no
/// stored coefficient is zero; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  // Drops zero coefficients; throws if a monomial uses a variable >= num_vars.
  Polynomial(std::size_t num_vars, TermMap terms);

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::uint32_t var);
  static Polynomial term(std::size_t num_vars, const Monomial& m, const Rational& c);
  // sum_i coeffs[i] x_i
  static Polynomial linear(std::span<const Rational> coeffs);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Maximum total degree; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  Rational coefficient(const Monomial& m) const;

  // Accumulates c * m, erasing the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  // Same polynomial viewed in more variables.
  Polynomial extended(std::size_t num_vars) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(std::uint32_t e) const;

  Rational max_abs_coefficient() const;
  // Largest signed coefficient; nullopt for the zero polynomial.
  std::optional<Rational> max_coefficient() const;

  // Human-readable form, e.g. "2*x0^2*x1 - 1/3*x2".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

// d^alpha f. Throws std::out_of_range if alpha uses a variable >= num_vars.
Polynomial differentiate(const Polynomial& f, const Monomial& alpha);
Polynomial partial(const Polynomial& f, std::uint32_t var);

// (prod_j sum_i V_ij d_i) f, one factor per direction vector. Directions must
// have length num_vars and nonnegative entries (std::invalid_argument).
Polynomial dv_derivative(const Polynomial& f, const std::vector<RationalVector>& directions);

// Directional derivative sum_i v_i d_i f for arbitrary real v.
Polynomial directional_derivative(const Polynomial& f, std::span<const Rational> v);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
double evaluate_approx(const Polynomial& f, std::span<const double> point);

// f(M y) expanded in map.cols() variables. Requires map.rows() == num_vars.
Polynomial substitute_linear(const Polynomial& f, const LinearMap& map);

// [d_i d_j f](point), exact.
SymMatrix hessian_at(const Polynomial& f, std::span<const Rational> point);

// Constant Hessian of a polynomial of degree <= 2 (only its quadratic part
// contributes).
SymMatrix quadratic_hessian(const Polynomial& f);

struct Homogeneity {
  bool homogeneous = true;
  // nullopt for the zero polynomial, which is homogeneous of every degree.
  std::optional<std::uint32_t> degree;
};
Homogeneity homogeneity(const Polynomial& f);
bool is_homogeneous(const Polynomial& f);
bool has_nonneg_coeffs(const Polynomial& f);

// Variables appearing in some term, ascending. Equivalently those i with
// d_i f != 0.
std::vector<std::uint32_t> active_variables(const Polynomial& f);
bool is_multiaffine(const Polynomial& f);

// t -> f(base + t dir), exact.
UniPoly univariate_restriction(const Polynomial& f, std::span<const Rational> base,
                               std::span<const Rational> dir);

// Multiplies f by x_new^power where x_new is a fresh last variable; with
// power 0 the polynomial is returned unchanged.
Polynomial lift_with_new_variable(const Polynomial& f, std::uint32_t power);

}  // namespace lorentz

#endif  // LORENTZ_POLYNOMIAL_HPP
