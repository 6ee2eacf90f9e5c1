#include "lorentz/linear_map.hpp"

#include <stdexcept>
#include <utility>

namespace lorentz {

LinearMap::LinearMap(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  LinearMap m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows in LinearMap");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector LinearMap::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
  RationalVector y(rows_);
  Rational t;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) == 0 || sgn(x[c]) == 0) continue;
      t = a * x[c];
      y[r] += t;
    }
  }
  return y;
}

std::vector<double> LinearMap::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) y[r] += a.get_d() * x[c];
    }
  }
  return y;
}

RationalVector LinearMap::column(std::size_t c) const {
  RationalVector col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

std::size_t LinearMap::rank() const {
  std::vector<Rational> a = entries_;
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(at(pivot, c)) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(pivot, k), at(rank, k));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (sgn(at(r, c)) == 0) continue;
      const Rational factor = at(r, c) / at(rank, c);
      for (std::size_t k = c; k < cols_; ++k) at(r, k) -= factor * at(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace lorentz
