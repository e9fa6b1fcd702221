#include <cmath>

#include "doctest.h"
#include "spinent/entanglement.hpp"
#include "spinent/error.hpp"
#include "spinent/linalg.hpp"
#include "spinent/model.hpp"
#include "support.hpp"

using namespace spinent;

namespace {

ComplexVector eigenstate(int label) {
  return analytic_spectrum({}).levels[static_cast<std::size_t>(label - 1)].state;
}

double pure_negativity(const ComplexVector& psi) { return negativity(ComplexMatrix::outer(psi)).negativity; }

void check_result_invariants(const NegativityResult& r) {
  CHECK(r.negativity >= 0.0);
  double neg_sum = 0.0;
  for (double l : r.negative_eigenvalues) {
    CHECK(l < 0.0);
    neg_sum -= l;
  }
  CHECK(std::abs(r.negativity - (r.trace_norm - 1.0) / 2.0) <= 1e-12);
  CHECK(std::abs(r.negativity - neg_sum) <= 1e-12);
}

ComplexMatrix conjugate_locally(const ComplexMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v) {
  const auto w = kron(u, v);
  return w * rho * w.adjoint();
}

}  // namespace

TEST_CASE("negativity of reference states") {
  CHECK(pure_negativity(eigenstate(7)) == 0.0);
  CHECK(pure_negativity(eigenstate(1)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pure_negativity(eigenstate(9)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(negativity((1.0 / 9.0) * ComplexMatrix::identity(9)).negativity == 0.0);
}

TEST_CASE("eigenstate negativities match the Schmidt closed form") {
  const double frozen[9] = {0.5, 0.5, 0.5, 0.5, 5.0 / 6.0, 0.5, 0.0, 0.0, 1.0};
  for (int label = 1; label <= 9; ++label) {
    CAPTURE(label);
    const auto psi = eigenstate(label);
    const double oracle = testing::schmidt_negativity(psi);
    CHECK(std::abs(oracle - frozen[label - 1]) <= 1e-12);
    const auto r = negativity(ComplexMatrix::outer(psi));
    CHECK(std::abs(r.negativity - frozen[label - 1]) <= 1e-12);
    check_result_invariants(r);
  }
}

TEST_CASE("random pure states agree with the Schmidt oracle") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = testing::random_unit_vector(9, rng);
    const auto r = negativity(ComplexMatrix::outer(psi));
    CHECK(std::abs(r.negativity - testing::schmidt_negativity(psi)) <= 1e-11);
    check_result_invariants(r);
  }
}

TEST_CASE("invalid states are rejected") {
  for (const auto& bad : {ComplexMatrix::identity(9), ComplexMatrix::diagonal({1.5, -0.5, 0, 0, 0, 0, 0, 0, 0})}) {
    try {
      negativity(bad);
      FAIL("expected InvalidState");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidState);
    }
  }
  ComplexMatrix skew = (1.0 / 9.0) * ComplexMatrix::identity(9);
  skew(0, 1) = 0.01;
  CHECK_THROWS_AS(negativity(skew), Error);
}

TEST_CASE("separable states have exactly zero negativity") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_unit_vector(3, rng);
    const auto b = testing::random_unit_vector(3, rng);
    ComplexVector ab(9);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ab[3 * i + j] = a[i] * b[j];
    CHECK(pure_negativity(ab) == 0.0);

    // convex mixture of product states
    ComplexMatrix mix(9);
    double total = 0.0;
    for (int term = 0; term < 4; ++term) {
      const double w = testing::uniform(rng, 0.1, 1.0);
      total += w;
      mix += w * kron(ComplexMatrix::outer(testing::random_unit_vector(3, rng)),
                      ComplexMatrix::outer(testing::random_unit_vector(3, rng)));
    }
    mix *= 1.0 / total;
    CHECK(negativity(mix).negativity == 0.0);

    // diagonal states are mixtures of basis products
    std::vector<double> diag(9);
    double s = 0.0;
    for (auto& d : diag) s += (d = testing::uniform(rng, 0.0, 1.0));
    for (auto& d : diag) d /= s;
    CHECK(negativity(ComplexMatrix::diagonal(diag)).negativity == 0.0);
  }
}

TEST_CASE("negativity is invariant under local unitaries") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = testing::random_unitary(3, rng);
    const auto v = testing::random_unitary(3, rng);
    const ModelParams p{testing::uniform(rng, -1, 0), testing::uniform(rng, -1.5, 0), testing::uniform(rng, -1, 1),
                        testing::uniform(rng, 0.02, 1)};
    const auto thermal = gibbs_state(p).matrix();
    const auto random = testing::random_density(9, rng);
    for (const auto* rho : {&thermal, &random}) {
      const double before = negativity(*rho).negativity;
      const double after = negativity(conjugate_locally(*rho, u, v)).negativity;
      CHECK(std::abs(before - after) <= 1e-10);
    }
  }
}

TEST_CASE("transposing either subsystem gives the same negativity") {
  testing::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = trial % 2 ? testing::random_density(9, rng)
                               : gibbs_state({testing::uniform(rng, -1, 0), testing::uniform(rng, -1.5, 0),
                                              testing::uniform(rng, -1, 1), testing::uniform(rng, 0.02, 1)})
                                     .matrix();
    const auto a = negativity(rho, Subsystem::A);
    const auto b = negativity(rho, Subsystem::B);
    CHECK(std::abs(a.negativity - b.negativity) <= 1e-12);
  }
}

TEST_CASE("thermal negativity examples") {
  CHECK(std::abs(negativity_at({-0.4, -0.6, 0.0, 1e-3}) - 1.0) <= 1e-6);
  CHECK(std::abs(negativity_at({-0.4, -0.6, 0.5, 1e-3})) <= 1e-6);
  for (double b = 0.0; b <= 2.0; b += 0.1)
    for (double t = 0.01; t <= 2.0; t *= 1.5) CHECK(negativity_at({-0.4, 0.0, b, t}) == 0.0);
}

TEST_CASE("thermal negativity is even in the field") {
  testing::Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2),
                        testing::uniform(rng, 0.02, 3)};
    ModelParams q = p;
    q.B = -p.B;
    CHECK(std::abs(negativity_at(p) - negativity_at(q)) <= 1e-12);
  }
}
