#include "lorentz/lorentzian.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace lorentz {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string alpha_string(const Monomial& alpha, std::size_t num_vars) {
  std::string out = "(";
  const auto dense = alpha.dense(num_vars);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dense[i]);
  }
  return out + ")";
}

}  // namespace

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::decomposable:
      return "decomposable";
    case FailureKind::bad_inertia:
      return "bad-inertia";
    case FailureKind::negative_coefficient:
      return "negative-coefficient";
    case FailureKind::not_homogeneous:
      return "not-homogeneous";
    case FailureKind::zero_polynomial:
      return "zero-polynomial";
  }
  return "unknown";
}

std::string LorentzianVerdict::describe(std::size_t num_vars) const {
  if (is_lorentzian || !failure) return "lorentzian";
  const FailureWitness& w = *failure;
  std::string out = "α=" + alpha_string(w.alpha, num_vars) + ": " + to_string(w.kind);
  if (w.kind == FailureKind::decomposable) {
    out += " (" + std::to_string(w.components) + " support components";
    if (w.inertia) out += ", Hessian inertia " + w.inertia->to_string();
    out += ")";
  } else if (w.kind == FailureKind::bad_inertia && w.inertia) {
    out += " (" + std::to_string(w.inertia->n_pos) + " positive eigenvalue" +
           (w.inertia->n_pos == 1 ? "" : "s") + ", inertia " + w.inertia->to_string() + ")";
  }
  return out;
}

std::size_t support_components(const Polynomial& f) {
  const auto active = active_variables(f);
  if (active.empty()) return 0;
  DisjointSets sets(f.num_vars());
  std::size_t components = active.size();
  for (const auto& [m, c] : f.terms()) {
    const auto& fac = m.factors();
    for (std::size_t k = 1; k < fac.size(); ++k) {
      if (sets.unite(fac[0].first, fac[k].first)) --components;
    }
  }
  return components;
}

SupportGraph support_graph(const Polynomial& f) {
  SupportGraph g;
  g.active_vars = active_variables(f);
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& [m, c] : f.terms()) {
    const auto& fac = m.factors();
    for (std::size_t a = 0; a < fac.size(); ++a)
      for (std::size_t b = a + 1; b < fac.size(); ++b) edges.emplace(fac[a].first, fac[b].first);
  }
  g.edges.assign(edges.begin(), edges.end());
  g.components = support_components(f);
  return g;
}

bool is_indecomposable(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_indecomposable: zero polynomial");
  return support_components(f) <= 1;
}

bool quadratic_is_log_concave(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("quadratic_is_log_concave: zero polynomial");
  const auto h = homogeneity(f);
  if (!h.homogeneous || h.degree != 2u) {
    throw std::invalid_argument("quadratic_is_log_concave: expected a homogeneous quadratic");
  }
  if (!has_nonneg_coeffs(f)) {
    throw std::invalid_argument("quadratic_is_log_concave: negative coefficient");
  }
  return inertia(quadratic_hessian(f)).n_pos == 1;
}

LorentzianVerdict is_lorentzian(const Polynomial& f) {
  LorentzianVerdict verdict;
  auto fail = [&](FailureWitness w) {
    verdict.is_lorentzian = false;
    verdict.failure = std::move(w);
    return verdict;
  };

  if (f.is_zero()) return fail({Monomial{}, FailureKind::zero_polynomial, 0, std::nullopt});
  if (!has_nonneg_coeffs(f)) {
    return fail({Monomial{}, FailureKind::negative_coefficient, 0, std::nullopt});
  }
  const auto h = homogeneity(f);
  if (!h.homogeneous) return fail({Monomial{}, FailureKind::not_homogeneous, 0, std::nullopt});

  const std::uint32_t d = *h.degree;
  if (d < 2) {
    verdict.is_lorentzian = true;
    return verdict;
  }

  for (std::uint32_t order = 0; order + 2 <= d; ++order) {
    const bool quadratic_level = order + 2 == d;
    for (const Monomial& alpha : monomials_of_degree(f.num_vars(), order)) {
      const Polynomial g = differentiate(f, alpha);
      if (g.is_zero()) continue;
      ++verdict.derivatives_checked;
      const std::size_t components = support_components(g);
      std::optional<Inertia> in;
      if (quadratic_level) in = inertia(quadratic_hessian(g));
      if (components > 1) return fail({alpha, FailureKind::decomposable, components, in});
      if (in && in->n_pos != 1) return fail({alpha, FailureKind::bad_inertia, components, in});
    }
  }
  verdict.is_lorentzian = true;
  return verdict;
}

bool cubic_is_log_concave(const Polynomial& f) {
  const auto h = homogeneity(f);
  if (f.is_zero() || !h.homogeneous || h.degree != 3u) {
    throw std::invalid_argument("cubic_is_log_concave: expected a homogeneous cubic");
  }
  if (!has_nonneg_coeffs(f)) throw std::invalid_argument("cubic_is_log_concave: negative coefficient");
  return is_lorentzian(f).is_lorentzian;
}

bool log_concave_at(const Polynomial& f, std::span<const Rational> w) {
  const auto h = homogeneity(f);
  if (!h.homogeneous || !h.degree || *h.degree < 2) {
    throw std::invalid_argument("log_concave_at: expected a homogeneous polynomial of degree >= 2");
  }
  if (sgn(evaluate(f, w)) <= 0) throw std::domain_error("log_concave_at: requires f(w) > 0");
  return inertia(hessian_at(f, w)).n_pos == 1;
}

}  // namespace lorentz
