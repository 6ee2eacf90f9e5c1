#include "lorentz/real_roots.hpp"

#include <stdexcept>

namespace lorentz {

namespace {

// Sign of p at +inf (side > 0) or -inf (side < 0).
int sign_at_infinity(const UniPoly& p, int side) {
  int s = sgn(p.leading());
  if (side < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<UniPoly>& chain, const std::optional<Rational>& x,
                          int infinity_side) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    signs.push_back(x ? q.sign_at(*x) : sign_at_infinity(q, infinity_side));
  }
  return sign_variations(signs);
}

}  // namespace

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(primitive_part(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_part(d));
  while (true) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    r *= Rational(-1);
    chain.push_back(primitive_part(r));
  }
  return chain;
}

std::size_t real_root_count(const UniPoly& p, const Interval& interval) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count of the zero polynomial");
  if (interval.lower && interval.upper && *interval.lower >= *interval.upper) {
    throw std::invalid_argument("real_root_count: empty interval");
  }
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(square_free_part(p));
  const std::size_t lo = variations_at(chain, interval.lower, -1);
  const std::size_t hi = variations_at(chain, interval.upper, +1);
  return lo - hi;
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted of the zero polynomial");
  if (p.degree() <= 1) return true;
  const UniPoly s = square_free_part(p);
  if (s.degree() <= 1) return true;
  return real_root_count(s) == static_cast<std::size_t>(s.degree());
}

}  // namespace lorentz
