#pragma once

#include "spinent/kernels.hpp"

namespace spinent::kernels::scalar {
void rotate_pair(cplx* x, cplx* y, std::size_t n, double c, cplx s);
void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void rank1_update(cplx* m, const cplx* v, double w, std::size_t n);
}  // namespace spinent::kernels::scalar

#if defined(SPINENT_HAVE_AVX2)
namespace spinent::kernels::avx2 {
void rotate_pair(cplx* x, cplx* y, std::size_t n, double c, cplx s);
void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void rank1_update(cplx* m, const cplx* v, double w, std::size_t n);
}  // namespace spinent::kernels::avx2
#endif
