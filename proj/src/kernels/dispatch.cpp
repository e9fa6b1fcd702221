#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace spinent::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, "scalar", &scalar::rotate_pair, &scalar::matmul,
                              &scalar::rank1_update};

#if defined(SPINENT_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, "avx2", &avx2::rotate_pair, &avx2::matmul,
                            &avx2::rank1_update};
#endif

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("SPINENT_KERNELS")) {
    if (std::string(forced) == "scalar") return kScalar;
  }
#if defined(SPINENT_HAVE_AVX2)
  if (supported(Isa::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SPINENT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) throw std::invalid_argument("kernel ISA not available on this machine");
#if defined(SPINENT_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace spinent::kernels
