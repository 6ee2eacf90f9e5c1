#ifndef LORENTZ_SYM_MATRIX_HPP
#define LORENTZ_SYM_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/rational.hpp"

namespace lorentz {

class LinearMap;

/// Symmetric matrix over the rationals. Only the upper triangle is stored,
/// so symmetry holds by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const RationalVector& d);
  // Builds from a full row-major matrix; throws if it is not symmetric.
  static SymMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t size() const { return n_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator*=(const Rational& s);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(const Rational& s, SymMatrix a);

// S^T A S. Requires S.rows() == A.size().
SymMatrix congruence(const SymMatrix& a, const LinearMap& s);

}  // namespace lorentz

#endif  // LORENTZ_SYM_MATRIX_HPP
