#ifndef LORENTZ_REAL_ROOTS_HPP
#define LORENTZ_REAL_ROOTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lorentz/unipoly.hpp"

namespace lorentz {

// Half-open interval (lower, upper]; an absent bound is infinite.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// Sturm chain p0 = s, p1 = s', p_{k+1} = -rem(p_{k-1}, p_k), each term
// rescaled by a positive factor to a primitive integer polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots of p in the interval (whole line by default).
// Throws std::invalid_argument on the zero polynomial or an empty interval.
std::size_t real_root_count(const UniPoly& p, const Interval& interval = {});

// True iff every complex root of p is real (constants count as real rooted).
bool is_real_rooted(const UniPoly& p);

}  // namespace lorentz

#endif  // LORENTZ_REAL_ROOTS_HPP
