#pragma once

#include <array>
#include <vector>

#include "spinent/complex_matrix.hpp"

namespace spinent {

// Two spin-1 sites with bilinear (J) and biquadratic (K) exchange in a
// longitudinal field B, at temperature T; k_B = 1 throughout.
struct ModelParams {
  double J = 0.0;
  double K = 0.0;
  double B = 0.0;
  double T = 0.0;
};

struct HubbardParams {
  double t = 0.0;   // hopping
  double U0 = 0.0;  // on-site repulsion, total spin 0 channel
  double U2 = 0.0;  // on-site repulsion, total spin 2 channel
};

struct Couplings {
  double J;
  double K;
  double epsilon;  // constant offset J - K
};

struct SpinOperators {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;
};

struct Level {
  int label;  // 1..9
  double energy;
  ComplexVector state;  // product basis, see below
};

struct AnalyticSpectrum {
  std::array<Level, 9> levels;
};

struct GroundState {
  std::vector<int> labels;  // ascending
  double energy;
};

inline constexpr double kGroundTieTol = 1e-12;

// Product basis |m1, m2>, m in {1, 0, -1}, site 1 major:
//   index = 3 * (1 - m1) + (1 - m2)
constexpr std::size_t basis_index(int m1, int m2) noexcept {
  return static_cast<std::size_t>(3 * (1 - m1) + (1 - m2));
}

SpinOperators spin1_operators();

// Throws ZeroRepulsion when either repulsion vanishes.
Couplings couplings_from_hubbard(const HubbardParams& h);

// S1.S2 on the 9-dimensional two-site space.
ComplexMatrix exchange_operator();
// S1z + S2z
ComplexMatrix total_sz();

// J (S1.S2) + K (S1.S2)^2 + B (S1z + S2z); the constant epsilon is dropped.
ComplexMatrix build_hamiltonian(const ModelParams& p);

// Closed-form eigenpairs, labels 1..9 in the conventional order.
AnalyticSpectrum analytic_spectrum(const ModelParams& p);

std::array<double, 9> analytic_energies(const ModelParams& p);

GroundState ground_state(const ModelParams& p);

}  // namespace spinent
