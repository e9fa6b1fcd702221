#include "spinent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& m, double tol, const kernels::KernelTable& k) {
  if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotHermitian, "input fails Hermiticity check");

  const std::size_t n = m.dim();

  // Work on the exactly Hermitian part taken from the upper triangle.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = m(i, j);
      a(j, i) = std::conj(m(i, j));
    }
  }

  // Rows of w accumulate V^H, so every update is a contiguous row rotation.
  ComplexMatrix w = ComplexMatrix::identity(n);

  const double scale = a.frobenius_norm();
  const double target = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  double off = off_diagonal_norm(a);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps && off > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex sigma = (t * c) * (apq / mag);

        k.rotate_pair(&a(p, 0), &a(q, 0), n, c, sigma);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = std::conj(a(p, r));
          a(r, q) = std::conj(a(q, r));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        k.rotate_pair(&w(p, 0), &w(q, 0), n, c, sigma);
      }
    }
    off = off_diagonal_norm(a);
  }
  if (off > tol * std::max(scale, 1.0)) {
    throw Error(ErrorCode::NoConvergence, "off-diagonal norm " + std::to_string(off) + " after " +
                                              std::to_string(sweep) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).real());
    ComplexVector v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = std::conj(w(idx, r));
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  return hermitian_eig(m, tol).eigenvalues;
}

namespace {

void require_product_dim(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b) {
    throw Error(ErrorCode::DimensionMismatch, "matrix dim " + std::to_string(m.dim()) + " != " +
                                                  std::to_string(dim_a) + "*" + std::to_string(dim_b));
  }
}

}  // namespace

ComplexMatrix partial_transpose_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  require_product_dim(m, dim_a, dim_b);
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
          out(i * dim_b + k, j * dim_b + l) = m(j * dim_b + k, i * dim_b + l);
  return out;
}

ComplexMatrix partial_transpose_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  require_product_dim(m, dim_a, dim_b);
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
          out(i * dim_b + k, j * dim_b + l) = m(i * dim_b + l, j * dim_b + k);
  return out;
}

double trace_norm_hermitian(const ComplexMatrix& m, double tol) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(m, tol)) s += std::abs(lambda);
  return s;
}

}  // namespace spinent
