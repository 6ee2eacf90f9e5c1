#ifndef LORENTZ_TESTS_SUPPORT_HPP
#define LORENTZ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lorentz/graph.hpp"
#include "lorentz/inertia.hpp"
#include "lorentz/linear_map.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/sym_matrix.hpp"
#include "lorentz/unipoly.hpp"

namespace lorentz::testing {

// Hand-rolled generators. Everything is driven by an explicit engine so a
// failing case can be replayed from its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }
  // num / den with |num| <= range and den in [1, max_den].
  Rational rational(std::int64_t range = 20, std::int64_t max_den = 7);
  Rational nonneg_rational(std::int64_t range = 20, std::int64_t max_den = 7);
  Rational positive_rational(std::int64_t range = 20, std::int64_t max_den = 7);
  RationalVector vector(std::size_t n, std::int64_t range = 20, std::int64_t max_den = 7);
  RationalVector positive_vector(std::size_t n);
  RationalVector nonzero_vector(std::size_t n);

  // Random homogeneous polynomial of the given degree with `terms` monomials
  // drawn with replacement.
  Polynomial homogeneous(std::size_t num_vars, std::uint32_t degree, std::size_t terms, bool nonneg);
  // Random polynomial with terms of mixed degree up to max_degree.
  Polynomial sparse(std::size_t num_vars, std::uint32_t max_degree, std::size_t terms);
  // Product of `count` linear forms with nonnegative coefficients, each with
  // at least one positive coefficient.
  Polynomial product_of_nonneg_linear_forms(std::size_t num_vars, std::uint32_t count);

  SymMatrix symmetric(std::size_t n, std::int64_t range = 9);
  LinearMap invertible(std::size_t n);
  Graph graph(std::uint32_t n, double edge_probability);

 private:
  std::mt19937_64 rng_;
};

std::int64_t sign(const Rational& r);

// e_d(x_0, ..., x_{n-1}).
Polynomial elementary_symmetric(std::size_t n, std::uint32_t d);

// Polynomial from a (coefficient, dense exponent vector) list.
Polynomial poly(std::size_t num_vars,
                const std::vector<std::pair<Rational, std::vector<std::uint32_t>>>& terms);

// Inertia from the characteristic polynomial: Faddeev-LeVerrier produces
// det(tI - A) and Descartes' rule of signs, which is exact for real-rooted
// polynomials, counts positive and negative roots.
UniPoly characteristic_polynomial(const SymMatrix& a);
Inertia charpoly_inertia(const SymMatrix& a);

// omega(G) by enumerating all vertex subsets.
std::uint32_t naive_clique_number(const Graph& g);

// One representative per isomorphism class of graphs on n vertices.
std::vector<Graph> graphs_up_to_isomorphism(std::uint32_t n);

// Second partial d^2 f / dx_i dx_j computed term by term, independent of
// Polynomial::partial.
Polynomial naive_second_partial(const Polynomial& f, std::uint32_t i, std::uint32_t j);

// Largest value of g(z) = -3 z^4 + 6 c z - b^2 over z = j/64 in
// [0, 4 max(1, c)], together with the critical point (c/2)^(1/3) bracketed
// by neighbouring multiples of 2^-40. Exact.
Rational depressed_g_grid_max(const Rational& b, const Rational& c);

}  // namespace lorentz::testing

#endif  // LORENTZ_TESTS_SUPPORT_HPP
