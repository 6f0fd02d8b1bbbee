#include "geokernels/kernels.hpp"

#include <cmath>
#include <string>

#include "geokernels/errors.hpp"

namespace geokernels {

void KernelSpec::validate() const {
  if (!(lambda > 0.0)) {
    throw ValidationError("kernel bandwidth lambda must be > 0, got " +
                          std::to_string(lambda));
  }
  if (!(q > 0.0)) {
    throw ValidationError("kernel exponent q must be > 0, got " + std::to_string(q));
  }
}

void GramMatrix::validate() const {
  const auto n = entries.rows();
  if (n != entries.cols()) {
    throw ValidationError("gram matrix must be square");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries(i, i) != 1.0) {
      throw ValidationError("gram diagonal must be 1 at index " + std::to_string(i));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries(i, j) - entries(j, i)) > 1e-12) {
        throw ValidationError("gram asymmetry at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      if (!(entries(i, j) > 0.0) || entries(i, j) > 1.0) {
        throw ValidationError("gram entry out of (0,1] at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
}

double exp_kernel_value(double distance, const KernelSpec& spec) {
  spec.validate();
  if (distance < 0.0) {
    throw DomainError("distance must be nonnegative, got " + std::to_string(distance));
  }
  return std::exp(-spec.lambda * std::pow(distance, spec.q));
}

GramMatrix gram_matrix(const DistanceMatrix& d, const KernelSpec& spec) {
  d.validate();
  spec.validate();
  const auto n = d.entries.rows();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      k(i, j) = k(j, i) = exp_kernel_value(d.entries(i, j), spec);
    }
  }
  return GramMatrix{std::move(k), spec, d.space};
}

Eigen::MatrixXd centered_cnd_kernel(const DistanceMatrix& d, int base) {
  d.validate();
  const auto n = d.entries.rows();
  if (base < 0 || base >= n) {
    throw ValidationError("base index " + std::to_string(base) + " out of range [0," +
                          std::to_string(n - 1) + "]");
  }
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      k(i, j) = 0.5 * (d.entries(i, base) + d.entries(base, j) - d.entries(i, j));
    }
  }
  return k;
}

DistanceMatrix sqrt_distance_matrix(const DistanceMatrix& d) {
  d.validate();
  DistanceMatrix out{d.entries.cwiseSqrt(), d.space};
  return out;
}

}  // namespace geokernels
