// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace spinent::kernels::avx2 {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// (ar + i ai) * v, lane-wise over the two complex entries of v.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_re_im(v)));
}

}  // namespace

void rotate_pair(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  const __m256d nsi = _mm256_set1_pd(-s.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    const __m256d sy = cmul(sr, si, yv);
    const __m256d csx = cmul(sr, nsi, xv);
    store2(x + k, _mm256_fmsub_pd(vc, xv, sy));
    store2(y + k, _mm256_fmadd_pd(vc, yv, csx));
  }
  if (k < n) scalar::rotate_pair(x + k, y + k, n - k, c, s);
}

void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = out + i * n;
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d ar = _mm256_set1_pd(a[i * n + k].real());
        const __m256d ai = _mm256_set1_pd(a[i * n + k].imag());
        acc = _mm256_add_pd(acc, cmul(ar, ai, load2(b + k * n + j)));
      }
      store2(row + j, acc);
    }
    for (; j < n; ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
        const double br = b[k * n + j].real(), bi = b[k * n + j].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      row[j] = {re, im};
    }
  }
}

void rank1_update(cplx* m, const cplx* v, double w, std::size_t n) {
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d ar = _mm256_set1_pd(w * v[i].real());
    const __m256d ai = _mm256_set1_pd(w * v[i].imag());
    cplx* row = m + i * n;
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d vc = _mm256_xor_pd(load2(v + j), conj_mask);
      store2(row + j, _mm256_add_pd(load2(row + j), cmul(ar, ai, vc)));
    }
    for (; j < n; ++j) {
      const double alr = w * v[i].real(), ali = w * v[i].imag();
      const double vr = v[j].real(), vi = -v[j].imag();
      row[j] = {row[j].real() + (alr * vr - ali * vi), row[j].imag() + (alr * vi + ali * vr)};
    }
  }
}

}  // namespace spinent::kernels::avx2
