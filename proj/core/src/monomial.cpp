#include "lorentz/monomial.hpp"

#include <algorithm>
#include <functional>

namespace lorentz {

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(var, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  Monomial m;
  for (std::uint32_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] == 0) continue;
    m.factors_.emplace_back(v, exponents[v]);
    m.degree_ += exponents[v];
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
  return it != factors_.end() && it->first == var ? it->second : 0;
}

std::vector<std::uint32_t> Monomial::dense(std::size_t num_vars) const {
  std::vector<std::uint32_t> out(std::max<std::size_t>(num_vars, variable_bound()), 0);
  for (const auto& [v, e] : factors_) out[v] = e;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(v) + '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial using the lower-indexed variable is larger there.
      return fa[i].first < fb[i].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (auto c = fa[i].second <=> fb[i].second; c != 0) return c;
  }
  return fa.size() <=> fb.size();
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> exps(num_vars, 0);
  // Generates lex-descending from x0^d; reversed at the end.
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t var, std::uint32_t left) {
    if (var + 1 == num_vars) {
      exps[var] = left;
      out.push_back(Monomial::from_exponents(exps));
      exps[var] = 0;
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, degree);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace lorentz
