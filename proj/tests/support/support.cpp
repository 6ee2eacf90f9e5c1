#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace lorentz::testing {

std::int64_t Gen::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational Gen::rational(std::int64_t range, std::int64_t max_den) {
  Rational r(static_cast<long>(integer(-range, range)), static_cast<unsigned long>(integer(1, max_den)));
  r.canonicalize();
  return r;
}

Rational Gen::nonneg_rational(std::int64_t range, std::int64_t max_den) {
  Rational r(static_cast<long>(integer(0, range)), static_cast<unsigned long>(integer(1, max_den)));
  r.canonicalize();
  return r;
}

Rational Gen::positive_rational(std::int64_t range, std::int64_t max_den) {
  Rational r(static_cast<long>(integer(1, range)), static_cast<unsigned long>(integer(1, max_den)));
  r.canonicalize();
  return r;
}

RationalVector Gen::vector(std::size_t n, std::int64_t range, std::int64_t max_den) {
  RationalVector v(n);
  for (auto& x : v) x = rational(range, max_den);
  return v;
}

RationalVector Gen::positive_vector(std::size_t n) {
  RationalVector v(n);
  for (auto& x : v) x = positive_rational();
  return v;
}

RationalVector Gen::nonzero_vector(std::size_t n) {
  for (;;) {
    RationalVector v = vector(n);
    if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return sgn(r) != 0; })) return v;
  }
}

Polynomial Gen::homogeneous(std::size_t num_vars, std::uint32_t degree, std::size_t terms, bool nonneg) {
  const auto monomials = monomials_of_degree(num_vars, degree);
  Polynomial p(num_vars);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& m = monomials[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(monomials.size()) - 1))];
    p.add_term(m, nonneg ? positive_rational(9, 4) : rational(9, 4));
  }
  return p;
}

Polynomial Gen::sparse(std::size_t num_vars, std::uint32_t max_degree, std::size_t terms) {
  Polynomial p(num_vars);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(num_vars, 0);
    const auto d = static_cast<std::uint32_t>(integer(0, max_degree));
    for (std::uint32_t i = 0; i < d; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(num_vars) - 1))];
    p.add_term(Monomial::from_exponents(e), rational(9, 4));
  }
  return p;
}

Polynomial Gen::product_of_nonneg_linear_forms(std::size_t num_vars, std::uint32_t count) {
  Polynomial p = Polynomial::constant(num_vars, 1);
  for (std::uint32_t f = 0; f < count; ++f) {
    RationalVector c(num_vars);
    for (auto& x : c) x = coin() ? nonneg_rational(9, 5) : Rational(0);
    c[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(num_vars) - 1))] += positive_rational(9, 5);
    p = p * Polynomial::linear(c);
  }
  return p;
}

SymMatrix Gen::symmetric(std::size_t n, std::int64_t range) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = coin() ? rational(range, 3) : Rational(0);
  return a;
}

LinearMap Gen::invertible(std::size_t n) {
  for (;;) {
    LinearMap s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = rational(5, 3);
    if (s.rank() == n) return s;
  }
}

Graph Gen::graph(std::uint32_t n, double edge_probability) {
  std::bernoulli_distribution edge(edge_probability);
  std::vector<Graph::Edge> edges;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (edge(rng_)) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

std::int64_t sign(const Rational& r) { return sgn(r); }

Polynomial elementary_symmetric(std::size_t n, std::uint32_t d) {
  Polynomial p(n);
  std::vector<std::uint32_t> pick(n, 0);
  std::fill(pick.end() - d, pick.end(), 1u);
  do {
    p.add_term(Monomial::from_exponents(pick), 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

Polynomial poly(std::size_t num_vars,
                const std::vector<std::pair<Rational, std::vector<std::uint32_t>>>& terms) {
  Polynomial p(num_vars);
  for (const auto& [c, e] : terms) p.add_term(Monomial::from_exponents(e), c);
  return p;
}

namespace {

using Dense = std::vector<RationalVector>;

Dense dense(const SymMatrix& a) {
  const std::size_t n = a.size();
  Dense out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a(i, j);
  return out;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::size_t sign_changes(const RationalVector& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

UniPoly characteristic_polynomial(const SymMatrix& a) {
  const std::size_t n = a.size();
  const Dense A = dense(a);
  RationalVector c(n + 1);
  c[n] = 1;
  Dense m(n, RationalVector(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Dense next = multiply(A, m);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    const Dense am = multiply(A, m);
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return UniPoly(c);
}

Inertia charpoly_inertia(const SymMatrix& a) {
  const UniPoly p = characteristic_polynomial(a);
  const RationalVector& c = p.coefficients();
  std::size_t zeros = 0;
  while (zeros < c.size() && sgn(c[zeros]) == 0) ++zeros;
  RationalVector rest(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  RationalVector mirrored = rest;
  for (std::size_t i = 0; i < mirrored.size(); ++i)
    if ((i + zeros) % 2 == 1) mirrored[i] = -mirrored[i];
  Inertia out;
  out.n_zero = zeros;
  out.n_pos = sign_changes(rest);
  out.n_neg = sign_changes(mirrored);
  return out;
}

std::uint32_t naive_clique_number(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  std::uint32_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::uint32_t>(__builtin_popcountll(s));
    if (size <= best) continue;
    bool clique = true;
    for (std::uint32_t a = 0; a < n && clique; ++a)
      for (std::uint32_t b = a + 1; b < n && clique; ++b)
        if ((s >> a & 1) && (s >> b & 1) && !g.adjacent(a, b)) clique = false;
    if (clique) best = size;
  }
  return best;
}

std::vector<Graph> graphs_up_to_isomorphism(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  auto slot_of = [&](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin());
  };
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::uint64_t canonical = mask;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) image |= std::uint64_t{1} << slot_of(p[slots[s].first], p[slots[s].second]);
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<Graph::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (canonical >> s & 1) edges.push_back(slots[s]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

Polynomial naive_second_partial(const Polynomial& f, std::uint32_t i, std::uint32_t j) {
  Polynomial out(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    auto e = m.dense(f.num_vars());
    Rational coeff = c * e[i];
    if (e[i] == 0) continue;
    --e[i];
    coeff *= e[j];
    if (e[j] == 0) continue;
    --e[j];
    out.add_term(Monomial::from_exponents(e), coeff);
  }
  return out;
}

Rational depressed_g_grid_max(const Rational& b, const Rational& c) {
  auto g = [&](const Rational& z) -> Rational { return -3 * z * z * z * z + 6 * c * z - b * b; };
  const Rational top = 4 * std::max(Rational(1), c);
  const Rational step(1, 64);
  Rational best = g(0);
  for (Rational z = step; z <= top; z += step) best = std::max(best, g(z));
  const double star = std::cbrt(c.get_d() / 2);
  const Integer scale = Integer(1) << 40;
  const Integer center(std::floor(std::ldexp(star, 40)));
  for (long offset = -1; offset <= 2; ++offset) {
    Rational z{Integer(center + offset), scale};
    z.canonicalize();
    if (sgn(z) >= 0) best = std::max(best, g(z));
  }
  return best;
}

}  // namespace lorentz::testing
