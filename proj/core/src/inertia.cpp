#include "lorentz/inertia.hpp"

#include <algorithm>
#include <vector>

namespace lorentz {

std::string Inertia::to_string() const {
  return "(" + std::to_string(n_pos) + ", " + std::to_string(n_zero) + ", " +
         std::to_string(n_neg) + ")";
}

Inertia inertia(const SymMatrix& input) {
  SymMatrix a = input;
  Inertia result;
  std::vector<std::size_t> live(a.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::vector<Rational> ratio;
  Rational t;
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(),
                             [&](std::size_t k) { return sgn(a(k, k)) != 0; });
    if (diag != live.end()) {
      const std::size_t k = *diag;
      live.erase(diag);
      const Rational pivot = a(k, k);
      (sgn(pivot) > 0 ? result.n_pos : result.n_neg) += 1;

      ratio.assign(live.size(), Rational{});
      for (std::size_t p = 0; p < live.size(); ++p) {
        if (sgn(a(live[p], k)) != 0) ratio[p] = a(live[p], k) / pivot;
      }
      for (std::size_t p = 0; p < live.size(); ++p) {
        if (sgn(ratio[p]) == 0) continue;
        for (std::size_t q = p; q < live.size(); ++q) {
          const Rational& akq = a(k, live[q]);
          if (sgn(akq) == 0) continue;
          t = ratio[p] * akq;
          a(live[p], live[q]) -= t;
        }
      }
      continue;
    }

    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t p = 0; p < live.size() && !found; ++p)
      for (std::size_t q = p + 1; q < live.size(); ++q)
        if (sgn(a(live[p], live[q])) != 0) {
          bi = live[p];
          bj = live[q];
          found = true;
          break;
        }
    if (!found) {
      result.n_zero += live.size();
      break;
    }

    // Hyperbolic block [[0, b], [b, 0]]: one positive, one negative.
    result.n_pos += 1;
    result.n_neg += 1;
    live.erase(std::remove_if(live.begin(), live.end(),
                              [&](std::size_t v) { return v == bi || v == bj; }),
               live.end());
    const Rational b = a(bi, bj);
    for (std::size_t p = 0; p < live.size(); ++p) {
      const std::size_t r = live[p];
      const Rational ri = a(r, bi) / b;
      const Rational rj = a(r, bj) / b;
      if (sgn(ri) == 0 && sgn(rj) == 0) continue;
      for (std::size_t q = p; q < live.size(); ++q) {
        const std::size_t s = live[q];
        if (sgn(ri) != 0 && sgn(a(bj, s)) != 0) {
          t = ri * a(bj, s);
          a(r, s) -= t;
        }
        if (sgn(rj) != 0 && sgn(a(bi, s)) != 0) {
          t = rj * a(bi, s);
          a(r, s) -= t;
        }
      }
    }
  }
  return result;
}

}  // namespace lorentz
