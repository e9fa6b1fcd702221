#include "spinent/model.hpp"

#include <algorithm>
#include <cmath>

#include "spinent/error.hpp"
#include "spinent/linalg.hpp"

namespace spinent {

SpinOperators spin1_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  return {
      ComplexMatrix{0.0, r, 0.0,  //
                    r, 0.0, r,    //
                    0.0, r, 0.0},
      ComplexMatrix{0.0, -i * r, 0.0,  //
                    i * r, 0.0, -i * r,  //
                    0.0, i * r, 0.0},
      ComplexMatrix::diagonal({1.0, 0.0, -1.0}),
  };
}

Couplings couplings_from_hubbard(const HubbardParams& h) {
  if (h.U0 == 0.0 || h.U2 == 0.0) throw Error(ErrorCode::ZeroRepulsion, "U0 and U2 must be nonzero");
  const double t2 = h.t * h.t;
  const double J = -2.0 * t2 / h.U2;
  const double K = -2.0 * t2 / (3.0 * h.U2) - 4.0 * t2 / h.U0;
  return {J, K, J - K};
}

ComplexMatrix exchange_operator() {
  const auto s = spin1_operators();
  return kron(s.x, s.x) + kron(s.y, s.y) + kron(s.z, s.z);
}

ComplexMatrix total_sz() {
  const auto s = spin1_operators();
  const auto id = ComplexMatrix::identity(3);
  return kron(s.z, id) + kron(id, s.z);
}

ComplexMatrix build_hamiltonian(const ModelParams& p) {
  const ComplexMatrix d = exchange_operator();
  return p.J * d + p.K * (d * d) + p.B * total_sz();
}

std::array<double, 9> analytic_energies(const ModelParams& p) {
  const double J = p.J, K = p.K, B = p.B;
  return {K + J - B,     K + J + B, K - J + B,     K - J - B, K + J,
          K - J,         K + J + 2.0 * B, K + J - 2.0 * B, 4.0 * K - 2.0 * J};
}

AnalyticSpectrum analytic_spectrum(const ModelParams& p) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);

  struct Amp {
    int m1, m2;
    double c;
  };
  const auto state = [](std::initializer_list<Amp> amps) {
    ComplexVector v(9);
    for (const auto& a : amps) v[basis_index(a.m1, a.m2)] = a.c;
    return v;
  };

  const auto e = analytic_energies(p);
  return {{{
      {1, e[0], state({{0, -1, r2}, {-1, 0, r2}})},
      {2, e[1], state({{1, 0, r2}, {0, 1, r2}})},
      {3, e[2], state({{1, 0, -r2}, {0, 1, r2}})},
      {4, e[3], state({{0, -1, -r2}, {-1, 0, r2}})},
      {5, e[4], state({{1, -1, r6}, {-1, 1, r6}, {0, 0, 2.0 * r6}})},
      {6, e[5], state({{1, -1, r2}, {-1, 1, -r2}})},
      {7, e[6], state({{1, 1, 1.0}})},
      {8, e[7], state({{-1, -1, 1.0}})},
      {9, e[8], state({{1, -1, r3}, {-1, 1, r3}, {0, 0, -r3}})},
  }}};
}

GroundState ground_state(const ModelParams& p) {
  const auto e = analytic_energies(p);
  const double emin = *std::min_element(e.begin(), e.end());
  GroundState g{{}, emin};
  for (int i = 0; i < 9; ++i)
    if (e[static_cast<std::size_t>(i)] - emin <= kGroundTieTol) g.labels.push_back(i + 1);
  return g;
}

}  // namespace spinent
