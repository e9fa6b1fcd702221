#pragma once

// Data-parallel inner loops used by the dense linear algebra. Each kernel has
// a portable scalar reference and, on x86-64, an AVX2/FMA variant. The variant
// is chosen once per process from the CPU's capabilities; setting the
// environment variable SPINENT_KERNELS=scalar forces the reference path.
//
// All complex buffers are interleaved (re, im) pairs, i.e. the layout of
// std::complex<double>. Matrices are square and row-major.

#include <complex>
#include <cstddef>
#include <string_view>

namespace spinent::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;

  // Simultaneous plane rotation of two contiguous vectors:
  //   x <- c*x - s*y
  //   y <- conj(s)*x + c*y
  void (*rotate_pair)(cplx* x, cplx* y, std::size_t n, double c, cplx s);

  // out = a * b for n x n matrices; out must not alias a or b.
  void (*matmul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);

  // m += w * v * v^H for an n x n matrix m.
  void (*rank1_update)(cplx* m, const cplx* v, double w, std::size_t n);
};

bool supported(Isa isa) noexcept;

// Throws std::invalid_argument when the ISA is not compiled in or not
// supported by the running CPU.
const KernelTable& table(Isa isa);

// Process-wide selection; stable for the lifetime of the process.
const KernelTable& active() noexcept;

}  // namespace spinent::kernels
