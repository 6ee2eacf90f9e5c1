#include "lorentz/directional.hpp"

#include <limits>
#include <stdexcept>

#include "lorentz/gadgets.hpp"
#include "lorentz/sqrt_compare.hpp"

namespace lorentz {

namespace {

// Advances c to the next composition of sum(c) in ascending lex order.
bool next_composition(std::vector<std::uint32_t>& c) {
  const std::size_t n = c.size();
  if (n < 2) return false;
  std::uint32_t tail = c[n - 1];
  std::size_t i = n - 1;
  while (i > 0) {
    --i;
    if (tail > 0) {
      ++c[i];
      for (std::size_t j = i + 1; j < n; ++j) c[j] = 0;
      c[n - 1] = tail - 1;
      return true;
    }
    tail += c[i];
  }
  return false;
}

}  // namespace

bool depressed_cubic_log_concave(const Rational& b, const Rational& c) {
  if (sgn(b) < 0 || sgn(c) < 0) {
    throw std::invalid_argument("depressed_cubic_log_concave: coefficients must be nonnegative");
  }
  return 4 * b * b * b >= 27 * c * c;
}

DirectionalGadget build_directional_gadget(const Polynomial& q) {
  if (!q.is_zero()) {
    const auto h = homogeneity(q);
    if (!h.homogeneous || h.degree != 3u) {
      throw std::invalid_argument("build_directional_gadget: q must be a homogeneous cubic");
    }
  }
  if (!has_nonneg_coeffs(q)) {
    throw std::invalid_argument("build_directional_gadget: q has a negative coefficient");
  }
  if (q.num_vars() == 0) throw std::invalid_argument("build_directional_gadget: q has no variables");
  const std::size_t n = q.num_vars();
  const auto z = static_cast<std::uint32_t>(n);
  Polynomial f(n + 1);
  f.add_term(Monomial::variable(z, 3), 1);
  for (std::uint32_t i = 0; i < n; ++i) f.add_term(Monomial::from_factors({{i, 2}, {z, 1}}), 3);
  f += Rational(2) * q.extended(n + 1);
  return {q, std::move(f)};
}

GraphDirectionalInstance build_graph_directional_gadget(const Graph& g, std::uint32_t k) {
  if (k < 1 || k > g.vertex_count()) {
    throw std::invalid_argument("build_graph_directional_gadget: k must satisfy 1 <= k <= n");
  }
  GraphDirectionalInstance out;
  out.graph = g;
  out.k = k;
  const Polynomial qg = build_q_G(g);
  out.ell = ell_of_k(static_cast<std::uint32_t>(qg.num_vars()), k);
  if (sgn(out.ell) > 0) {
    out.gadget = build_directional_gadget(qg * (1 / out.ell));
  } else if (qg.is_zero()) {
    out.gadget = build_directional_gadget(qg);
  }
  return out;
}

Rational directional_lc_numerator(const Polynomial& f, std::span<const Rational> base,
                                  std::span<const Rational> v) {
  const UniPoly h = univariate_restriction(f, base, v);
  const Rational& h0 = h.coefficient(0);
  const Rational& h1 = h.coefficient(1);
  const Rational& h2 = h.coefficient(2);
  return 2 * h0 * h2 - h1 * h1;
}

bool directional_lc_at(const Polynomial& f, std::span<const Rational> base,
                       std::span<const Rational> v) {
  if (base.size() != f.num_vars() || v.size() != f.num_vars()) {
    throw std::invalid_argument("directional_lc_at: dimension mismatch");
  }
  for (const auto& b : base) {
    if (sgn(b) < 0) throw std::invalid_argument("directional_lc_at: base must be nonnegative");
  }
  if (sgn(evaluate(f, base)) <= 0) throw std::domain_error("directional_lc_at: requires f(base) > 0");
  return sgn(directional_lc_numerator(f, base, v)) <= 0;
}

std::uint64_t simplex_grid_size(std::size_t num_vars, std::uint32_t grid) {
  // C(grid + num_vars - 1, num_vars - 1)
  if (num_vars == 0) return 0;
  Integer c = 1;
  for (std::size_t i = 1; i < num_vars; ++i) {
    c *= grid + i;
    c /= i;
  }
  if (c > Integer(std::numeric_limits<std::uint64_t>::max() >> 1)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return std::stoull(c.get_str());
}

std::uint32_t default_grid(std::size_t num_vars, std::uint64_t max_points) {
  if (num_vars <= 4) return 20;
  std::uint32_t g = 20;
  while (g > 1 && simplex_grid_size(num_vars, g) > max_points) --g;
  return g;
}

bool graph_directional_verdict(const Rational& ell, std::uint32_t omega) {
  return compare_to_sqrt(ell, a_squared(omega)) >= 0;
}

DirectionalVerdict gadget_directional_verdict(const DirectionalGadget& gadget,
                                              const std::optional<CliqueMaxInfo>& clique,
                                              std::optional<std::uint32_t> grid) {
  const std::size_t n = gadget.q.num_vars();
  if (gadget.assembled.num_vars() != n + 1) {
    throw std::invalid_argument("gadget_directional_verdict: malformed gadget");
  }
  DirectionalVerdict out;
  if (gadget.q.is_zero()) {
    out.exact = true;
    return out;
  }
  if (clique) {
    out.exact = true;
    out.log_concave = graph_directional_verdict(clique->ell, clique->omega);
    return out;
  }

  out.grid = grid.value_or(default_grid(n));
  if (out.grid == 0) throw std::invalid_argument("gadget_directional_verdict: grid must be positive");
  std::vector<std::uint32_t> c(n, 0);
  c[n - 1] = out.grid;
  RationalVector x(n);
  do {
    ++out.points_scanned;
    Rational norm2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(c[i], out.grid);
      x[i].canonicalize();
      norm2 += x[i] * x[i];
    }
    const Rational qx = evaluate(gadget.q, x);
    if (sgn(qx) == 0) {
      ++out.boundary_points;
      continue;
    }
    if (!depressed_cubic_log_concave(3 * norm2, 2 * qx)) {
      out.log_concave = false;
      out.grid_coordinates = c;
      out.witness = x;
      return out;
    }
  } while (next_composition(c));
  return out;
}

}  // namespace lorentz
