#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spinent {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense square matrix of complex scalars, row-major.
class ComplexMatrix {
 public:
  // dim x dim zero matrix; dim must be >= 1.
  explicit ComplexMatrix(std::size_t dim);

  // Row-major values; the count must be a perfect square.
  ComplexMatrix(std::initializer_list<Complex> values);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);
  static ComplexMatrix diagonal(std::initializer_list<double> entries);
  // |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<Complex> row(std::size_t r) noexcept { return {data_.data() + r * dim_, dim_}; }
  std::span<const Complex> row(std::size_t r) const noexcept { return {data_.data() + r * dim_, dim_}; }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  ComplexVector operator*(std::span<const Complex> v) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

// max_ij |a_ij - b_ij|; throws DimensionMismatch when the shapes differ.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |M_ij - conj(M_ji)| <= tol
bool is_hermitian(const ComplexMatrix& m, double tol);

// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double norm2(std::span<const Complex> v) noexcept;
Complex inner(std::span<const Complex> a, std::span<const Complex> b) noexcept;  // <a|b>

}  // namespace spinent
