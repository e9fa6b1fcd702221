#include "spinent/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinent/error.hpp"
#include "spinent/kernels.hpp"
#include "spinent/linalg.hpp"

namespace spinent {

namespace {

void require_positive_temperature(double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::NonpositiveTemperature, "T = " + std::to_string(temperature));
  }
}

}  // namespace

DensityMatrix DensityMatrix::validate(ComplexMatrix m, double psd_tol) {
  if (!m.all_finite()) throw Error(ErrorCode::InvalidState, "non-finite entries");
  if (!is_hermitian(m, kStateHermitianTol)) throw Error(ErrorCode::InvalidState, "not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTraceTol) {
    throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lowest = hermitian_eigenvalues(m).front();
  if (lowest < -psd_tol) {
    throw Error(ErrorCode::InvalidState, "negative eigenvalue " + std::to_string(lowest));
  }
  return DensityMatrix(std::move(m));
}

double partition_function(const ModelParams& p) {
  require_positive_temperature(p.T);
  const double beta = 1.0 / p.T;
  const double z = 2.0 * std::exp(-beta * p.K) * std::cosh(beta * p.J) * (1.0 + 2.0 * std::cosh(beta * p.B)) +
                   2.0 * std::exp(-beta * (p.K + p.J)) * std::cosh(2.0 * beta * p.B) +
                   std::exp(-beta * (4.0 * p.K - 2.0 * p.J));
  if (!std::isfinite(z)) throw Error(ErrorCode::Overflow, "partition function exceeds double range");
  return z;
}

DensityMatrix gibbs_state(const ModelParams& p) {
  require_positive_temperature(p.T);
  const auto spectrum = analytic_spectrum(p);

  double emin = spectrum.levels[0].energy;
  for (const auto& level : spectrum.levels) emin = std::min(emin, level.energy);

  double z = 0.0;
  ComplexMatrix rho(9);
  const auto& k = kernels::active();
  for (const auto& level : spectrum.levels) {
    const double w = std::exp(-(level.energy - emin) / p.T);
    if (w == 0.0) continue;
    z += w;
    k.rank1_update(rho.data(), level.state.data(), w, 9);
  }
  rho *= 1.0 / z;
  return DensityMatrix(std::move(rho));
}

DensityMatrix gibbs_state_numeric(const ComplexMatrix& h, double temperature) {
  require_positive_temperature(temperature);
  const Spectrum s = hermitian_eig(h);
  const double emin = s.eigenvalues.front();
  double z = 0.0;
  for (double e : s.eigenvalues) z += std::exp(-(e - emin) / temperature);
  return DensityMatrix(
      spectral_function(s, [&](double e) { return std::exp(-(e - emin) / temperature) / z; }));
}

}  // namespace spinent
