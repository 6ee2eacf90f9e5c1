#ifndef LORENTZ_GADGETS_HPP
#define LORENTZ_GADGETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/graph.hpp"
#include "lorentz/linear_map.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

// q_G(x, y) = sum_{ij in E} x_i x_j y_ij in n + |E| variables: x-block
// (vertices) first, then one y variable per edge in Graph::edges() order.
Polynomial build_q_G(const Graph& g);

// a(k)^2 = (2/27)(1 - 1/k), the squared maximum of q_G on the unit sphere
// for a graph with clique number k.
Rational a_squared(std::uint32_t k);

// l(k) = ceil(8 n^2 a(k)) / (8 n^2) with n = num_vars (the variable count of
// q_G). Exact. Throws std::invalid_argument for k < 1 or num_vars < 1.
Rational ell_of_k(std::uint32_t num_vars, std::uint32_t k);

// a(k) <= l(k) < a(k + 1) for l computed with denominator 8 n^2. The upper
// comparison is skipped when k >= n.
bool sandwich_check(std::uint32_t n, std::uint32_t k);

// Largest power of ten strictly below `bound` (bound > 0).
Rational largest_power_of_ten_below(const Rational& bound);

/// Cubic hyperbolicity gadget p and its real-stability image p~ = p(M x).
struct StabilityGadget {
  Graph graph;
  std::uint32_t k = 0;
  Rational ell;
  std::size_t m = 0;  // non-distinguished variables: n + |E|
  Polynomial q;       // q_G / l in m variables
  Polynomial p;       // s^3 - 3 s (|x|^2 + |y|^2) + 2 q, variables (s, x, y)
  Rational N;         // max |coefficient| of 2 q
  Rational epsilon_bound;  // min(1 / (2 N m^3), 1/2)
  Rational epsilon;
  LinearMap M;        // (m + 1) x 2m, columns e0 + eps e_i then e0 - eps e_i
  Polynomial p_tilde;  // 2m variables, z-block then w-block

  std::vector<std::string> p_variable_names() const;
  std::vector<std::string> p_tilde_variable_names() const;
};

// Requires 2 <= k <= n (k = 1 gives l = 0). Without an explicit epsilon the
// largest power of ten below the bound is used. Throws std::invalid_argument
// on k or epsilon out of range.
StabilityGadget build_stability_gadget(const Graph& g, std::uint32_t k,
                                       std::optional<Rational> epsilon = std::nullopt);

// y^(d-3) p in one extra trailing variable (none when d = 3). Requires p to
// be a homogeneous cubic and d >= 3.
Polynomial lift_degree_stability(const Polynomial& p, std::uint32_t d);

// b_G(x; y) = -2k sum_{ij in E} x_i x_j y_i y_j - (1 - k)(sum x_i^2)(sum y_i^2)
// in 2n variables (x-block, y-block). Requires 1 <= k <= n.
Polynomial build_biquadratic(const Graph& g, std::uint32_t k);

struct QuarticConvexityForm {
  Polynomial f;
  Rational gamma;
  // C[i][j] = d^2 b / dx_i dy_j
  std::vector<std::vector<Polynomial>> mixed_hessian;
};

// f = b + (n^2 gamma / 2)(sum x^4 + sum y^4 + sum_{i<j} x_i^2 x_j^2 +
// sum_{i<j} y_i^2 y_j^2), gamma = largest |coefficient| in any entry of C.
QuarticConvexityForm build_quartic_convexity_form(const Graph& g, std::uint32_t k);

/// Quartic log-concavity gadget g = N (z + sum x_i + sum y_i)^4 - f.
struct QuarticGadget {
  Graph graph;
  std::uint32_t k = 0;
  Polynomial b;
  Rational gamma;
  Polynomial f;  // 2n variables
  Rational N;
  Polynomial g;  // 2n + 1 variables, z last

  std::vector<std::string> variable_names() const;
};

// N is the largest coefficient of f, or 1 when f has no positive
// coefficient. Throws std::logic_error if g acquires a negative coefficient.
QuarticGadget build_quartic_lc_gadget(const Graph& g, std::uint32_t k);

// (x = clique indicator, y = 0, z = 1): for omega(G) > k the Hessian of g
// has at least two positive eigenvalues there.
RationalVector quartic_witness_point(const QuarticGadget& gadget,
                                     const std::vector<std::uint32_t>& clique);

// z^(d-4) f in one extra trailing variable (none when d = 4). Requires f
// homogeneous quartic with nonnegative coefficients and d >= 4.
Polynomial lift_degree_lc(const Polynomial& f, std::uint32_t d);

}  // namespace lorentz

#endif  // LORENTZ_GADGETS_HPP
