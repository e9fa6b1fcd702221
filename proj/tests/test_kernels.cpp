#include <cstdlib>
#include <string>

#include "doctest.h"
#include "spinent/kernels.hpp"
#include "spinent/linalg.hpp"
#include "support.hpp"

using namespace spinent;
using spinent::kernels::cplx;
using spinent::kernels::Isa;

namespace {

std::vector<cplx> random_buffer(std::size_t n, testing::Rng& rng) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = testing::gaussian_complex(rng);
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("scalar rotate_pair on a real rotation") {
  const auto& k = kernels::table(Isa::Scalar);
  std::vector<cplx> x{{1.0, 0.0}, {0.0, 2.0}};
  std::vector<cplx> y{{0.0, 0.0}, {1.0, 0.0}};
  k.rotate_pair(x.data(), y.data(), 2, 0.6, {0.8, 0.0});
  CHECK(std::abs(x[0] - cplx(0.6, 0.0)) < 1e-15);
  CHECK(std::abs(y[0] - cplx(0.8, 0.0)) < 1e-15);
  CHECK(std::abs(x[1] - cplx(-0.8, 1.2)) < 1e-15);
  CHECK(std::abs(y[1] - cplx(0.6, 1.6)) < 1e-15);
}

TEST_CASE("rotate_pair with |c|^2 + |s|^2 = 1 preserves the pair norm") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const double angle = testing::uniform(rng, 0.0, 3.0);
    const double phase = testing::uniform(rng, -3.0, 3.0);
    const cplx s = std::polar(std::sin(angle), phase);
    auto x = random_buffer(9, rng);
    auto y = random_buffer(9, rng);
    double before = 0.0, after = 0.0;
    for (std::size_t i = 0; i < 9; ++i) before += std::norm(x[i]) + std::norm(y[i]);
    kernels::active().rotate_pair(x.data(), y.data(), 9, std::cos(angle), s);
    for (std::size_t i = 0; i < 9; ++i) after += std::norm(x[i]) + std::norm(y[i]);
    CHECK(after == doctest::Approx(before).epsilon(1e-14));
  }
}

TEST_CASE("scalar matmul and rank1_update on small known inputs") {
  const auto& k = kernels::table(Isa::Scalar);
  const std::vector<cplx> a{{1, 1}, {2, 0}, {0, -1}, {3, 0}};
  const std::vector<cplx> b{{0, 1}, {1, 0}, {1, 0}, {0, 2}};
  std::vector<cplx> c(4);
  k.matmul(a.data(), b.data(), c.data(), 2);
  CHECK(c[0] == cplx(1, 1));
  CHECK(c[1] == cplx(1, 5));
  CHECK(c[2] == cplx(4, 0));
  CHECK(c[3] == cplx(0, 5));

  std::vector<cplx> m(4);
  const std::vector<cplx> v{{1, 0}, {0, 1}};
  k.rank1_update(m.data(), v.data(), 2.0, 2);
  CHECK(m[0] == cplx(2, 0));
  CHECK(m[1] == cplx(0, -2));
  CHECK(m[2] == cplx(0, 2));
  CHECK(m[3] == cplx(2, 0));
}

TEST_CASE("active table honours SPINENT_KERNELS=scalar") {
  const char* forced = std::getenv("SPINENT_KERNELS");
  if (forced && std::string(forced) == "scalar") {
    CHECK(kernels::active().isa == Isa::Scalar);
  } else {
    CHECK(kernels::supported(kernels::active().isa));
  }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!kernels::supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence check skipped");
    return;
  }
  const auto& ref = kernels::table(Isa::Scalar);
  const auto& simd = kernels::table(Isa::Avx2);
  testing::Rng rng(2024);

  for (std::size_t n = 1; n <= 17; ++n) {
    CAPTURE(n);
    for (int trial = 0; trial < 20; ++trial) {
      const double c = testing::uniform(rng, -1.0, 1.0);
      const cplx s = testing::gaussian_complex(rng);
      auto x1 = random_buffer(n, rng), y1 = random_buffer(n, rng);
      auto x2 = x1, y2 = y1;
      ref.rotate_pair(x1.data(), y1.data(), n, c, s);
      simd.rotate_pair(x2.data(), y2.data(), n, c, s);
      CHECK(max_diff(x1, x2) <= 1e-14);
      CHECK(max_diff(y1, y2) <= 1e-14);

      const auto a = random_buffer(n * n, rng), b = random_buffer(n * n, rng);
      std::vector<cplx> c1(n * n), c2(n * n);
      ref.matmul(a.data(), b.data(), c1.data(), n);
      simd.matmul(a.data(), b.data(), c2.data(), n);
      CHECK(max_diff(c1, c2) <= 1e-13);

      auto m1 = random_buffer(n * n, rng);
      auto m2 = m1;
      const auto v = random_buffer(n, rng);
      const double w = testing::uniform(rng, 0.0, 2.0);
      ref.rank1_update(m1.data(), v.data(), w, n);
      simd.rank1_update(m2.data(), v.data(), w, n);
      CHECK(max_diff(m1, m2) <= 1e-14);
    }
  }
}

TEST_CASE("eigensolver agrees across kernel variants") {
  if (!kernels::supported(Isa::Avx2)) return;
  testing::Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = testing::random_hermitian(9, rng);
    const auto a = hermitian_eig(h, kDefaultTol, kernels::table(Isa::Scalar));
    const auto b = hermitian_eig(h, kDefaultTol, kernels::table(Isa::Avx2));
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-12);
  }
}
