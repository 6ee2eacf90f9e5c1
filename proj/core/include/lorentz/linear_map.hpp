#ifndef LORENTZ_LINEAR_MAP_HPP
#define LORENTZ_LINEAR_MAP_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lorentz/rational.hpp"

namespace lorentz {

/// Dense rational matrix used as a linear change of variables x = M y.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols);

  static LinearMap identity(std::size_t n);
  static LinearMap from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  // M x; zero entries are skipped, which matters for the sparse gadget maps.
  RationalVector apply(std::span<const Rational> x) const;
  std::vector<double> apply(std::span<const double> x) const;

  RationalVector column(std::size_t c) const;
  std::size_t rank() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace lorentz

#endif  // LORENTZ_LINEAR_MAP_HPP
