#include "lorentz/gadgets.hpp"

#include <stdexcept>

#include "lorentz/sqrt_compare.hpp"

namespace lorentz {

namespace {

void require_k(const Graph& g, std::uint32_t k, std::uint32_t lo, const char* who) {
  if (k < lo || k > g.vertex_count()) {
    throw std::invalid_argument(std::string(who) + ": k must satisfy " + std::to_string(lo) +
                                " <= k <= n = " + std::to_string(g.vertex_count()));
  }
}

Polynomial sum_of_powers(std::size_t num_vars, std::uint32_t first, std::uint32_t count,
                         std::uint32_t exponent) {
  Polynomial out(num_vars);
  for (std::uint32_t i = 0; i < count; ++i) out.add_term(Monomial::variable(first + i, exponent), 1);
  return out;
}

// sum_{i<j} x_i^2 x_j^2 over a block of variables
Polynomial pairwise_squares(std::size_t num_vars, std::uint32_t first, std::uint32_t count) {
  Polynomial out(num_vars);
  for (std::uint32_t i = 0; i < count; ++i)
    for (std::uint32_t j = i + 1; j < count; ++j)
      out.add_term(Monomial::from_factors({{first + i, 2}, {first + j, 2}}), 1);
  return out;
}

std::string edge_name(const char* prefix, const Graph::Edge& e) {
  return std::string(prefix) + std::to_string(e.first) + "_" + std::to_string(e.second);
}

}  // namespace

Polynomial build_q_G(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  Polynomial q(n + g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [i, j] = g.edges()[e];
    q.add_term(Monomial::from_factors({{i, 1}, {j, 1}, {static_cast<std::uint32_t>(n + e), 1}}), 1);
  }
  return q;
}

Rational a_squared(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("a_squared: k must be positive");
  return Rational(2, 27) * (1 - Rational(1, k));
}

Rational ell_of_k(std::uint32_t num_vars, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("ell_of_k: k must be at least 1");
  if (num_vars < 1) throw std::invalid_argument("ell_of_k: q must have at least one variable");
  const Integer scale = Integer(8) * num_vars * num_vars;
  Rational out(ceil_of_scaled_sqrt(a_squared(k), scale), scale);
  out.canonicalize();
  return out;
}

bool sandwich_check(std::uint32_t n, std::uint32_t k) {
  const Rational ell = ell_of_k(n, k);
  if (compare_to_sqrt(ell, a_squared(k)) < 0) return false;
  if (k >= n) return true;
  return compare_to_sqrt(ell, a_squared(k + 1)) < 0;
}

Rational largest_power_of_ten_below(const Rational& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("largest_power_of_ten_below: bound must be positive");
  int e = 0;
  while (power_of_ten(e) < bound) ++e;
  while (power_of_ten(e) >= bound) --e;
  return power_of_ten(e);
}

std::vector<std::string> StabilityGadget::p_variable_names() const {
  std::vector<std::string> names{"s"};
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) names.push_back("x" + std::to_string(i));
  for (const auto& e : graph.edges()) names.push_back(edge_name("y", e));
  return names;
}

std::vector<std::string> StabilityGadget::p_tilde_variable_names() const {
  const auto base = p_variable_names();
  std::vector<std::string> names;
  for (const char* block : {"z:", "w:"})
    for (std::size_t i = 1; i < base.size(); ++i) names.push_back(block + base[i]);
  return names;
}

StabilityGadget build_stability_gadget(const Graph& g, std::uint32_t k,
                                       std::optional<Rational> epsilon) {
  require_k(g, k, 2, "build_stability_gadget");
  StabilityGadget out;
  out.graph = g;
  out.k = k;
  out.m = g.vertex_count() + g.edge_count();
  out.ell = ell_of_k(static_cast<std::uint32_t>(out.m), k);
  const std::size_t m = out.m;

  out.q = build_q_G(g) * (1 / out.ell);
  // p in variables (s, x, y): shift q's variables right by one.
  LinearMap shift(m, m + 1);
  for (std::size_t i = 0; i < m; ++i) shift(i, i + 1) = 1;
  const Polynomial q_shifted = substitute_linear(out.q, shift);
  Polynomial norm2 = sum_of_powers(m + 1, 1, static_cast<std::uint32_t>(m), 2);
  const Polynomial s = Polynomial::variable(m + 1, 0);
  out.p = s.pow(3) - Rational(3) * (s * norm2) + Rational(2) * q_shifted;

  out.N = (Rational(2) * out.q).max_abs_coefficient();
  out.epsilon_bound = Rational(1, 2);
  if (sgn(out.N) > 0) {
    const Rational other = 1 / (2 * out.N * Rational(m * m * m));
    if (other < out.epsilon_bound) out.epsilon_bound = other;
  }
  if (epsilon) {
    if (sgn(*epsilon) <= 0 || *epsilon >= out.epsilon_bound) {
      throw std::invalid_argument("build_stability_gadget: epsilon " + to_string(*epsilon) +
                                  " outside (0, " + to_string(out.epsilon_bound) + ")");
    }
    out.epsilon = *epsilon;
  } else {
    out.epsilon = largest_power_of_ten_below(out.epsilon_bound);
  }

  out.M = LinearMap(m + 1, 2 * m);
  for (std::size_t c = 0; c < m; ++c) {
    out.M(0, c) = 1;
    out.M(c + 1, c) = out.epsilon;
    out.M(0, m + c) = 1;
    out.M(c + 1, m + c) = -out.epsilon;
  }
  out.p_tilde = substitute_linear(out.p, out.M);
  return out;
}

Polynomial lift_degree_stability(const Polynomial& p, std::uint32_t d) {
  const auto h = homogeneity(p);
  if (p.is_zero() || !h.homogeneous || h.degree != 3u) {
    throw std::invalid_argument("lift_degree_stability: expected a homogeneous cubic");
  }
  if (d < 3) throw std::invalid_argument("lift_degree_stability: d must be at least 3");
  return lift_with_new_variable(p, d - 3);
}

Polynomial build_biquadratic(const Graph& g, std::uint32_t k) {
  require_k(g, k, 1, "build_biquadratic");
  const std::uint32_t n = g.vertex_count();
  Polynomial b(2 * n);
  const Rational edge_coeff = -2 * Rational(k);
  for (const auto& [i, j] : g.edges()) {
    b.add_term(Monomial::from_factors({{i, 1}, {j, 1}, {n + i, 1}, {n + j, 1}}), edge_coeff);
  }
  const Rational cross = -(1 - Rational(k));
  if (sgn(cross) != 0) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        b.add_term(Monomial::from_factors({{i, 2}, {n + j, 2}}), cross);
  }
  return b;
}

QuarticConvexityForm build_quartic_convexity_form(const Graph& g, std::uint32_t k) {
  QuarticConvexityForm out;
  const Polynomial b = build_biquadratic(g, k);
  const std::uint32_t n = g.vertex_count();
  out.gamma = 0;
  out.mixed_hessian.assign(n, std::vector<Polynomial>(n, Polynomial(2 * n)));
  for (std::uint32_t i = 0; i < n; ++i) {
    const Polynomial di = partial(b, i);
    for (std::uint32_t j = 0; j < n; ++j) {
      out.mixed_hessian[i][j] = partial(di, n + j);
      const Rational c = out.mixed_hessian[i][j].max_abs_coefficient();
      if (c > out.gamma) out.gamma = c;
    }
  }
  Polynomial reg = sum_of_powers(2 * n, 0, n, 4) + sum_of_powers(2 * n, n, n, 4) +
                   pairwise_squares(2 * n, 0, n) + pairwise_squares(2 * n, n, n);
  out.f = b + (Rational(n) * n * out.gamma / 2) * reg;
  return out;
}

std::vector<std::string> QuarticGadget::variable_names() const {
  std::vector<std::string> names;
  const std::uint32_t n = graph.vertex_count();
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  return names;
}

QuarticGadget build_quartic_lc_gadget(const Graph& g, std::uint32_t k) {
  QuarticGadget out;
  out.graph = g;
  out.k = k;
  out.b = build_biquadratic(g, k);
  auto form = build_quartic_convexity_form(g, k);
  out.gamma = form.gamma;
  out.f = std::move(form.f);
  const auto top = out.f.max_coefficient();
  out.N = (top && sgn(*top) > 0) ? *top : Rational(1);

  const std::size_t vars = 2 * g.vertex_count() + 1;
  const RationalVector ones(vars, Rational(1));
  out.g = out.N * Polynomial::linear(ones).pow(4) - out.f.extended(vars);
  if (!has_nonneg_coeffs(out.g)) {
    throw std::logic_error("build_quartic_lc_gadget: g has a negative coefficient");
  }
  return out;
}

RationalVector quartic_witness_point(const QuarticGadget& gadget,
                                     const std::vector<std::uint32_t>& clique) {
  const std::uint32_t n = gadget.graph.vertex_count();
  RationalVector w(2 * n + 1, Rational(0));
  for (std::uint32_t v : clique) {
    if (v >= n) throw std::out_of_range("quartic_witness_point: vertex out of range");
    w[v] = 1;
  }
  w[2 * n] = 1;
  return w;
}

Polynomial lift_degree_lc(const Polynomial& f, std::uint32_t d) {
  const auto h = homogeneity(f);
  if (f.is_zero() || !h.homogeneous || h.degree != 4u) {
    throw std::invalid_argument("lift_degree_lc: expected a homogeneous quartic");
  }
  if (!has_nonneg_coeffs(f)) throw std::invalid_argument("lift_degree_lc: negative coefficient");
  if (d < 4) throw std::invalid_argument("lift_degree_lc: d must be at least 4");
  return lift_with_new_variable(f, d - 4);
}

}  // namespace lorentz
