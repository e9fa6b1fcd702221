#include "spinent/entanglement.hpp"

#include <cmath>

#include "spinent/linalg.hpp"

namespace spinent {

NegativityResult negativity(const DensityMatrix& rho, Subsystem transposed) {
  const ComplexMatrix pt = transposed == Subsystem::A ? partial_transpose_A(rho.matrix(), 3, 3)
                                                      : partial_transpose_B(rho.matrix(), 3, 3);
  const auto eigenvalues = hermitian_eigenvalues(pt);

  NegativityResult r{0.0, {}, 0.0};
  double negative_sum = 0.0;
  for (double lambda : eigenvalues) {
    r.trace_norm += std::abs(lambda);
    if (lambda < 0.0) {
      r.negative_eigenvalues.push_back(lambda);
      negative_sum -= lambda;
    }
  }
  r.negativity = negative_sum <= kNegativityClampTol ? 0.0 : negative_sum;
  return r;
}

NegativityResult negativity(const ComplexMatrix& rho, Subsystem transposed) {
  return negativity(DensityMatrix::validate(rho), transposed);
}

double negativity_at(const ModelParams& p) { return negativity(gibbs_state(p)).negativity; }

}  // namespace spinent
