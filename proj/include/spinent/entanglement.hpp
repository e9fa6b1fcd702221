#pragma once

#include <vector>

#include "spinent/complex_matrix.hpp"
#include "spinent/model.hpp"
#include "spinent/thermal.hpp"

namespace spinent {

inline constexpr double kNegativityClampTol = 1e-12;

enum class Subsystem { A, B };

struct NegativityResult {
  double negativity;                          // >= 0
  std::vector<double> negative_eigenvalues;   // of the partial transpose, ascending
  double trace_norm;                          // ||rho^T||_1
};

// Negativity of a two-qutrit state. Values within kNegativityClampTol of zero
// are reported as exactly 0.
NegativityResult negativity(const DensityMatrix& rho, Subsystem transposed = Subsystem::A);

// Validates a raw matrix first; throws InvalidState.
NegativityResult negativity(const ComplexMatrix& rho, Subsystem transposed = Subsystem::A);

// Thermal negativity N(J, K, B, T).
double negativity_at(const ModelParams& p);

}  // namespace spinent
