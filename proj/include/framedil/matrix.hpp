#ifndef FRAMEDIL_MATRIX_HPP
#define FRAMEDIL_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace framedil {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;

/// Dense complex matrix, row-major. Carrier for every operator, frame and
/// Gramian in the toolkit. Sizes stay at desk scale (n <= 256), so there is
/// no sparse path and no blocking.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cdouble(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double> &d);
  static ComplexMatrix from_rows(
      const std::vector<std::vector<cdouble>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  cdouble &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const cdouble &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cdouble> &data() const { return data_; }
  std::vector<cdouble> &data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  CVec column(std::size_t j) const;
  CVec row(std::size_t i) const;
  void set_column(std::size_t j, const CVec &v);

  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(cdouble s);

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  /// max-norm of A - A*.
  double hermitian_residual() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);

/// y = A x.
CVec mat_apply(const ComplexMatrix &a, const CVec &x);

/// <x, y> = sum_k x_k conj(y_k); linear in the first slot. Everything
/// conjugation-sensitive in the toolkit routes through this one function.
cdouble inner_product(const CVec &x, const CVec &y);

double norm2(const CVec &x);
CVec operator+(const CVec &a, const CVec &b);
CVec operator-(const CVec &a, const CVec &b);
CVec operator*(cdouble s, CVec x);

/// x y* as a rows(x) x rows(y) matrix.
ComplexMatrix outer_product(const CVec &x, const CVec &y);

double distance_frobenius(const ComplexMatrix &a, const ComplexMatrix &b);
double distance_max(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace framedil

#endif
