#pragma once

#include "spinent/complex_matrix.hpp"
#include "spinent/model.hpp"

namespace spinent {

inline constexpr double kStateHermitianTol = 1e-12;
inline constexpr double kStateTraceTol = 1e-12;
inline constexpr double kStatePsdTol = 1e-10;

// Unit-trace, Hermitian, positive semidefinite matrix. Instances are only
// produced by the thermal-state builders or by validate().
class DensityMatrix {
 public:
  // Throws InvalidState when Hermiticity, unit trace or positivity fail the
  // tolerances above (the positivity check is min eigenvalue >= -psd_tol).
  static DensityMatrix validate(ComplexMatrix m, double psd_tol = kStatePsdTol);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  friend DensityMatrix gibbs_state(const ModelParams&);
  friend DensityMatrix gibbs_state_numeric(const ComplexMatrix&, double);

  ComplexMatrix mat_;
};

// Closed form Z(J, K, B, T). Throws NonpositiveTemperature for T <= 0 and
// Overflow when the closed form leaves the double range.
double partition_function(const ModelParams& p);

// Z^-1 sum_i exp(-E_i/T) |Psi_i><Psi_i| from the closed-form spectrum.
// Weights are shifted by the ground energy so no exponential overflows.
DensityMatrix gibbs_state(const ModelParams& p);

// Same state through a numeric eigendecomposition of h.
DensityMatrix gibbs_state_numeric(const ComplexMatrix& h, double temperature);

}  // namespace spinent
