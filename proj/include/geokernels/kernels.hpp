#ifndef GEOKERNELS_KERNELS_HPP
#define GEOKERNELS_KERNELS_HPP

#include <Eigen/Core>

#include "geokernels/space.hpp"

namespace geokernels {

// Bandwidth and exponent of the exponential kernel exp(-lambda * d^q).
// q = 2 is the Gaussian family, q = 1 the Laplacian family.
struct KernelSpec {
  double lambda = 1.0;
  double q = 2.0;

  void validate() const;  // lambda > 0, q > 0
};

// Kernel values of one sample: symmetric, unit diagonal, entries in (0, 1].
struct GramMatrix {
  Eigen::MatrixXd entries;
  KernelSpec kernel;
  SpaceSpec space;

  int size() const { return static_cast<int>(entries.rows()); }
  void validate() const;
};

// exp(-lambda * d^q); 1 iff d = 0, strictly decreasing in d.
double exp_kernel_value(double distance, const KernelSpec& spec);

// Entrywise exponential kernel of a validated distance matrix.
GramMatrix gram_matrix(const DistanceMatrix& d, const KernelSpec& spec);

// Kernel centered at sample index `base`:
//   K[i][j] = (D[i][base] + D[base][j] - D[i][j]) / 2.
// Row and column `base` are identically zero and K[i][i] = D[i][base].
// Positive semidefinite whenever D is a conditionally negative definite
// metric sample. Not a GramMatrix (diagonal is not 1).
Eigen::MatrixXd centered_cnd_kernel(const DistanceMatrix& d, int base);

// Entrywise square root. The result of a metric is again a metric.
DistanceMatrix sqrt_distance_matrix(const DistanceMatrix& d);

}  // namespace geokernels

#endif
