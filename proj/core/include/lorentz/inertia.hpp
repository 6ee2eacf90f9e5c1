#ifndef LORENTZ_INERTIA_HPP
#define LORENTZ_INERTIA_HPP

#include <cstddef>
#include <string>

#include "lorentz/sym_matrix.hpp"

namespace lorentz {

/// Eigenvalue sign counts of a symmetric matrix. n_pos + n_zero + n_neg = n.
struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_zero = 0;
  std::size_t n_neg = 0;

  std::size_t size() const { return n_pos + n_zero + n_neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string to_string() const;
};

// Inertia by symmetric congruence elimination over the rationals.
//
// Each step pivots on a nonzero diagonal entry of the remaining Schur
// complement. When the whole remaining diagonal is zero but some a_ij is not,
// the 2x2 block [[0, a_ij], [a_ij, 0]] is eliminated at once and contributes
// one positive and one negative eigenvalue. A zero remainder contributes its
// dimension to n_zero. By Sylvester's law the counts equal the eigenvalue
// signs of A. O(n^3) rational operations.
Inertia inertia(const SymMatrix& a);

}  // namespace lorentz

#endif  // LORENTZ_INERTIA_HPP
