#include "lorentz/sym_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "lorentz/linear_map.hpp"

namespace lorentz {

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SymMatrix SymMatrix::diagonal(const RationalVector& d) {
  SymMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("SymMatrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

std::string SymMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << lorentz::to_string((*this)(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) {
  a += b;
  return a;
}

SymMatrix operator*(const Rational& s, SymMatrix a) {
  a *= s;
  return a;
}

SymMatrix congruence(const SymMatrix& a, const LinearMap& s) {
  if (s.rows() != a.size()) throw std::invalid_argument("congruence: dimension mismatch");
  const std::size_t n = a.size();
  const std::size_t m = s.cols();
  // as = A S, then S^T (A S).
  std::vector<Rational> as(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) as[i * m + j] += a(i, k) * s(k, j);
    }
  SymMatrix out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational acc;
      for (std::size_t k = 0; k < n; ++k) acc += s(k, i) * as[k * m + j];
      out(i, j) = acc;
    }
  return out;
}

}  // namespace lorentz
