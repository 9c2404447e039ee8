#include "framedil/matrix.hpp"

#include <cmath>

#include "framedil/error.hpp"

namespace framedil {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double> &d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    const std::vector<std::vector<cdouble>> &rows) {
  if (rows.empty()) return {};
  ComplexMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw Error(ErrorKind::ShapeMismatch, "ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CVec ComplexMatrix::column(std::size_t j) const {
  CVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CVec ComplexMatrix::row(std::size_t i) const {
  CVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, const CVec &v) {
  if (v.size() != rows_)
    throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  if (!same_shape(o)) throw Error(ErrorKind::ShapeMismatch, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  if (!same_shape(o)) throw Error(ErrorKind::ShapeMismatch, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cdouble s) {
  for (auto &z : data_) z *= s;
  return *this;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto &z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto &z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto &z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double ComplexMatrix::hermitian_residual() const {
  if (!is_square()) throw Error(ErrorKind::NotSquare, "hermitian_residual");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::ShapeMismatch, "matrix product");
  ComplexMatrix c(a.rows(), b.cols());
  // i-k-j order keeps the inner loop contiguous in both b and c.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(cdouble s, ComplexMatrix a) {
  a *= s;
  return a;
}

CVec mat_apply(const ComplexMatrix &a, const CVec &x) {
  if (a.cols() != x.size())
    throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
  CVec y(a.rows(), cdouble(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cdouble s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

cdouble inner_product(const CVec &x, const CVec &y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::ShapeMismatch, "inner product");
  cdouble s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

double norm2(const CVec &x) {
  double s = 0.0;
  for (const auto &z : x) s += std::norm(z);
  return std::sqrt(s);
}

CVec operator+(const CVec &a, const CVec &b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector +");
  CVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

CVec operator-(const CVec &a, const CVec &b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector -");
  CVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

CVec operator*(cdouble s, CVec x) {
  for (auto &z : x) z *= s;
  return x;
}

ComplexMatrix outer_product(const CVec &x, const CVec &y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

double distance_frobenius(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (!a.same_shape(b))
    throw Error(ErrorKind::ShapeMismatch, "distance_frobenius");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    s += std::norm(a.data()[k] - b.data()[k]);
  return std::sqrt(s);
}

double distance_max(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (!a.same_shape(b)) throw Error(ErrorKind::ShapeMismatch, "distance_max");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

} // namespace framedil
