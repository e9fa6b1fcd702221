#include "kernels_impl.hpp"

namespace spinent::kernels::scalar {

// Complex products are spelled out on the real parts: std::complex's operator*
// routes through the Annex G NaN-recovery helper, and the inputs here are
// always finite.

void rotate_pair(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  const double sr = s.real();
  const double si = s.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    x[k] = {c * xr - (sr * yr - si * yi), c * xi - (sr * yi + si * yr)};
    y[k] = {(sr * xr + si * xi) + c * yr, (sr * xi - si * xr) + c * yi};
  }
}

void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = out + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = {0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        row[j] = {row[j].real() + (ar * br - ai * bi), row[j].imag() + (ar * bi + ai * br)};
      }
    }
  }
}

void rank1_update(cplx* m, const cplx* v, double w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = w * v[i].real(), ai = w * v[i].imag();
    cplx* row = m + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      // alpha * conj(v_j)
      const double vr = v[j].real(), vi = -v[j].imag();
      row[j] = {row[j].real() + (ar * vr - ai * vi), row[j].imag() + (ar * vi + ai * vr)};
    }
  }
}

}  // namespace spinent::kernels::scalar
