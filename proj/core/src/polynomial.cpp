#include "lorentz/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

void require_dimension(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (got " +
                                std::to_string(got) + ", expected " + std::to_string(want) + ")");
  }
}

Rational rational_pow(const Rational& base, std::uint32_t e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // already canonical: powers of coprime integers stay coprime
}

// Falling factorial e (e-1) ... (e-k+1).
unsigned long falling(std::uint32_t e, std::uint32_t k) {
  unsigned long r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r *= (e - i);
  return r;
}

}  // namespace

Polynomial::Polynomial(std::size_t num_vars, TermMap terms) : num_vars_(num_vars) {
  for (auto& [m, c] : terms) {
    if (m.variable_bound() > num_vars_) {
      throw std::invalid_argument("monomial " + m.to_string() + " uses a variable >= " +
                                  std::to_string(num_vars_));
    }
    if (sgn(c) != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::uint32_t var) {
  if (var >= num_vars) throw std::out_of_range("variable index out of range");
  Polynomial p(num_vars);
  p.add_term(Monomial::variable(var), 1);
  return p;
}

Polynomial Polynomial::term(std::size_t num_vars, const Monomial& m, const Rational& c) {
  if (m.variable_bound() > num_vars) throw std::out_of_range("monomial variable out of range");
  Polynomial p(num_vars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coeffs) {
  Polynomial p(coeffs.size());
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(i), coeffs[i]);
  return p;
}

std::optional<std::uint32_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();  // grlex sorts by degree first
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::extended(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw std::invalid_argument("extended: cannot drop variables");
  Polynomial p = *this;
  p.num_vars_ = num_vars;
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  require_dimension(o.num_vars_, num_vars_, "polynomial arithmetic");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial p(a.num_vars_);
  Rational t;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      t = ca * cb;
      p.add_term(ma * mb, t);
    }
  return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::max_abs_coefficient() const {
  Rational best;
  for (const auto& [m, c] : terms_) {
    if (abs(c) > best) best = abs(c);
  }
  return best;
}

std::optional<Rational> Polynomial::max_coefficient() const {
  if (terms_.empty()) return std::nullopt;
  Rational best = terms_.begin()->second;
  for (const auto& [m, c] : terms_) {
    if (c > best) best = c;
  }
  return best;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [v, e] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += lorentz::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += lorentz::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& f, const Monomial& alpha) {
  if (alpha.variable_bound() > f.num_vars()) {
    throw std::out_of_range("differentiate: variable index out of range");
  }
  if (alpha.is_one()) return f;
  Polynomial out(f.num_vars());
  std::vector<Monomial::Factor> factors;
  for (const auto& [m, c] : f.terms()) {
    if (!alpha.divides(m)) continue;
    factors.clear();
    unsigned long scale = 1;
    for (const auto& [v, e] : m.factors()) {
      const std::uint32_t k = alpha.exponent(v);
      scale *= falling(e, k);
      if (e > k) factors.emplace_back(v, e - k);
    }
    out.add_term(Monomial::from_factors(factors), c * scale);
  }
  return out;
}

Polynomial partial(const Polynomial& f, std::uint32_t var) {
  return differentiate(f, Monomial::variable(var));
}

Polynomial directional_derivative(const Polynomial& f, std::span<const Rational> v) {
  require_dimension(v.size(), f.num_vars(), "directional_derivative");
  Polynomial out(f.num_vars());
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out += partial(f, i) * v[i];
  }
  return out;
}

Polynomial dv_derivative(const Polynomial& f, const std::vector<RationalVector>& directions) {
  for (const auto& d : directions) {
    require_dimension(d.size(), f.num_vars(), "dv_derivative");
    for (const auto& x : d) {
      if (sgn(x) < 0) throw std::invalid_argument("dv_derivative: negative direction entry");
    }
  }
  Polynomial g = f;
  for (const auto& d : directions) g = directional_derivative(g, d);
  return g;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  require_dimension(point.size(), f.num_vars(), "evaluate");
  Rational acc;
  Rational t;
  for (const auto& [m, c] : f.terms()) {
    t = c;
    for (const auto& [v, e] : m.factors()) {
      if (sgn(point[v]) == 0) {
        t = 0;
        break;
      }
      if (e == 1) {
        t *= point[v];
      } else {
        t *= rational_pow(point[v], e);
      }
    }
    acc += t;
  }
  return acc;
}

double evaluate_approx(const Polynomial& f, std::span<const double> point) {
  require_dimension(point.size(), f.num_vars(), "evaluate_approx");
  double acc = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double t = c.get_d();
    for (const auto& [v, e] : m.factors()) {
      for (std::uint32_t k = 0; k < e; ++k) t *= point[v];
    }
    acc += t;
  }
  return acc;
}

Polynomial substitute_linear(const Polynomial& f, const LinearMap& map) {
  require_dimension(map.rows(), f.num_vars(), "substitute_linear");
  const std::size_t n = map.cols();
  std::vector<Polynomial> forms;
  forms.reserve(map.rows());
  for (std::size_t r = 0; r < map.rows(); ++r) {
    Polynomial l(n);
    for (std::uint32_t c = 0; c < n; ++c) l.add_term(Monomial::variable(c), map(r, c));
    forms.push_back(std::move(l));
  }
  // powers[r][e - 1] = forms[r]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(map.rows());
  auto power_of = [&](std::uint32_t r, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[r];
    if (cache.empty()) cache.push_back(forms[r]);
    while (cache.size() < e) cache.push_back(cache.back() * forms[r]);
    return cache[e - 1];
  };

  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (const auto& [v, e] : m.factors()) {
      t = t * power_of(v, e);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

SymMatrix hessian_at(const Polynomial& f, std::span<const Rational> point) {
  require_dimension(point.size(), f.num_vars(), "hessian_at");
  const std::size_t n = f.num_vars();
  SymMatrix h(n);
  std::vector<std::uint32_t> exps;
  for (const auto& [m, c] : f.terms()) {
    const auto& fac = m.factors();
    const std::size_t k = fac.size();
    // Value of the monomial with exponents `exps` at the point.
    auto value = [&](const std::vector<std::uint32_t>& ex) {
      Rational t = c;
      for (std::size_t q = 0; q < k; ++q) {
        if (ex[q] == 0) continue;
        if (sgn(point[fac[q].first]) == 0) return Rational{};
        t *= rational_pow(point[fac[q].first], ex[q]);
      }
      return t;
    };
    exps.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        for (std::size_t q = 0; q < k; ++q) exps[q] = fac[q].second;
        unsigned long scale;
        if (a == b) {
          if (fac[a].second < 2) continue;
          scale = falling(fac[a].second, 2);
          exps[a] -= 2;
        } else {
          scale = static_cast<unsigned long>(fac[a].second) * fac[b].second;
          exps[a] -= 1;
          exps[b] -= 1;
        }
        Rational v = value(exps);
        if (sgn(v) == 0) continue;
        h(fac[a].first, fac[b].first) += v * scale;
      }
    }
  }
  return h;
}

SymMatrix quadratic_hessian(const Polynomial& f) {
  SymMatrix h(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 2) continue;
    const auto& fac = m.factors();
    if (fac.size() == 1) {
      h(fac[0].first, fac[0].first) += c * 2;
    } else {
      h(fac[0].first, fac[1].first) += c;
    }
  }
  return h;
}

Homogeneity homogeneity(const Polynomial& f) {
  Homogeneity h;
  if (f.is_zero()) return h;
  const std::uint32_t d = f.terms().begin()->first.degree();
  h.degree = d;
  h.homogeneous = f.terms().rbegin()->first.degree() == d;
  if (!h.homogeneous) h.degree = std::nullopt;
  return h;
}

bool is_homogeneous(const Polynomial& f) { return homogeneity(f).homogeneous; }

bool has_nonneg_coeffs(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return sgn(t.second) >= 0; });
}

std::vector<std::uint32_t> active_variables(const Polynomial& f) {
  std::vector<bool> seen(f.num_vars(), false);
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.factors()) seen[v] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool is_multiaffine(const Polynomial& f) {
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.factors())
      if (e > 1) return false;
  return true;
}

UniPoly univariate_restriction(const Polynomial& f, std::span<const Rational> base,
                               std::span<const Rational> dir) {
  require_dimension(base.size(), f.num_vars(), "univariate_restriction");
  require_dimension(dir.size(), f.num_vars(), "univariate_restriction");
  // Each term is built by multiplying its coefficient by (base_v + t dir_v)
  // one linear factor at a time, in place, then added into `out`.
  RationalVector out, acc;
  Rational scratch;
  for (const auto& [m, c] : f.terms()) {
    const std::size_t deg = m.degree();
    if (out.size() < deg + 1) out.resize(deg + 1);
    acc.resize(deg + 1);
    acc[0] = c;
    std::size_t len = 1;
    for (const auto& [v, e] : m.factors()) {
      const Rational& u = base[v];
      const Rational& w = dir[v];
      for (std::uint32_t k = 0; k < e; ++k) {
        mpq_mul(acc[len].get_mpq_t(), acc[len - 1].get_mpq_t(), w.get_mpq_t());
        for (std::size_t i = len - 1; i > 0; --i) {
          mpq_mul(acc[i].get_mpq_t(), acc[i].get_mpq_t(), u.get_mpq_t());
          mpq_mul(scratch.get_mpq_t(), acc[i - 1].get_mpq_t(), w.get_mpq_t());
          mpq_add(acc[i].get_mpq_t(), acc[i].get_mpq_t(), scratch.get_mpq_t());
        }
        mpq_mul(acc[0].get_mpq_t(), acc[0].get_mpq_t(), u.get_mpq_t());
        ++len;
      }
    }
    for (std::size_t i = 0; i < len; ++i) mpq_add(out[i].get_mpq_t(), out[i].get_mpq_t(), acc[i].get_mpq_t());
  }
  return UniPoly(std::move(out));
}

Polynomial lift_with_new_variable(const Polynomial& f, std::uint32_t power) {
  if (power == 0) return f;
  const auto n = static_cast<std::uint32_t>(f.num_vars());
  Polynomial out(n + 1);
  const Monomial y = Monomial::variable(n, power);
  for (const auto& [m, c] : f.terms()) out.add_term(m * y, c);
  return out;
}

}  // namespace lorentz
