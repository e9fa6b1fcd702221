#pragma once

// Test-only generators and oracles. Nothing here calls the eigensolver or the
// thermal-state builders, so the checks stay independent of the code under
// test.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "spinent/complex_matrix.hpp"

namespace spinent::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gaussian_complex(rng);
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_matrix(n, rng);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  return h;
}

inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (auto& z : v) z = gaussian_complex(rng);
  const double norm = norm2(v);
  for (auto& z : v) z /= norm;
  return v;
}

// Haar-ish unitary by Gram-Schmidt on Gaussian columns.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  std::vector<ComplexVector> cols;
  while (cols.size() < n) {
    ComplexVector v(n);
    for (auto& z : v) z = gaussian_complex(rng);
    for (const auto& u : cols) {
      const Complex proj = inner(u, v);
      for (std::size_t k = 0; k < n; ++k) v[k] -= proj * u[k];
    }
    const double norm = norm2(v);
    if (norm < 1e-6) continue;
    for (auto& z : v) z /= norm;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

// Random mixed state: X X^H / tr.
inline ComplexMatrix random_density(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_matrix(n, rng);
  ComplexMatrix rho = x * x.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

// Negativity of a pure two-qutrit state, C_ij = psi[3i + j].
inline double schmidt_negativity(const ComplexVector& psi) {
  // With singular values s_i of the 3x3 coefficient matrix C, the negativity is
  // p = s1 s2 + s1 s3 + s2 s3, which satisfies p^2 = e2 + 2 q sqrt(1 + 2p) where
  // e2 sums the principal 2x2 minors of C C^H and q = |det C|.
  ComplexMatrix c(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = psi[3 * i + j];
  const auto g = c * c.adjoint();
  double e2 = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) e2 += (g(i, i) * g(j, j) - g(i, j) * g(j, i)).real();
  const double q = std::abs(c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) -
                            c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0)) +
                            c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0)));
  double p = std::sqrt(std::max(e2, 0.0));
  for (int i = 0; i < 200; ++i) p = std::sqrt(std::max(e2 + 2.0 * q * std::sqrt(1.0 + 2.0 * p), 0.0));
  return p;
}

// Zero-field threshold temperature by the fixed-point map
//   T <- 3 (J - K) / ln((5 + 3 exp(2J/T)) / 2)
// which contracts for J < 0, K < J.
inline double fixed_point_threshold(double J, double K, int iterations = 5000) {
  double t = 0.5;
  for (int i = 0; i < iterations; ++i) t = 3.0 * (J - K) / std::log((5.0 + 3.0 * std::exp(2.0 * J / t)) / 2.0);
  return t;
}

// Closed-form levels typed independently of the library, ascending.
inline std::vector<double> sorted_closed_form_energies(double J, double K, double B) {
  std::vector<double> e{K + J - B, K + J + B, K - J + B, K - J - B,        K + J,
                        K - J,     K + J + 2 * B, K + J - 2 * B, 4 * K - 2 * J};
  std::sort(e.begin(), e.end());
  return e;
}

// Projector onto span{v_k}.
inline ComplexMatrix projector(const std::vector<ComplexVector>& vs, std::size_t n) {
  ComplexMatrix p(n);
  for (const auto& v : vs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += v[i] * std::conj(v[j]);
  return p;
}

}  // namespace spinent::testing
