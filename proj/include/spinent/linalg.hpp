#pragma once

#include <cstddef>
#include <vector>

#include "spinent/complex_matrix.hpp"
#include "spinent/kernels.hpp"

namespace spinent {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

// Eigenpairs of a Hermitian matrix, eigenvalues ascending. Within a
// degenerate cluster the individual vectors are arbitrary; only the spanned
// subspace is meaningful.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<ComplexVector> eigenvectors;
};

// result((i*dimB + k), (j*dimB + l)) = a(i, j) * b(k, l)
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic complex Jacobi eigensolver.
///
/// Throws NotHermitian when `is_hermitian(m, tol)` fails, NonFinite on NaN/Inf
/// entries, and NoConvergence when the off-diagonal Frobenius norm is still
/// above tol * ||m||_F after kMaxJacobiSweeps sweeps.
Spectrum hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol,
                       const kernels::KernelTable& k = kernels::active());

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);

// V * diag(f(lambda)) * V^H from a spectrum.
template <class F>
ComplexMatrix spectral_function(const Spectrum& s, F&& f);

// Transposes the A-factor indices of a (dimA*dimB)-dimensional operator:
// result((i,k),(j,l)) = m((j,k),(i,l)). Throws DimensionMismatch.
ComplexMatrix partial_transpose_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
// Same for the B factor: result((i,k),(j,l)) = m((i,l),(j,k)).
ComplexMatrix partial_transpose_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

// Sum of |lambda| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

template <class F>
ComplexMatrix spectral_function(const Spectrum& s, F&& f) {
  const std::size_t n = s.eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = f(s.eigenvalues[k]);
    if (w != 0.0) kernels::active().rank1_update(out.data(), s.eigenvectors[k].data(), w, n);
  }
  return out;
}

}  // namespace spinent
