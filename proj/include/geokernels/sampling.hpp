#ifndef GEOKERNELS_SAMPLING_HPP
#define GEOKERNELS_SAMPLING_HPP

#include <cstdint>
#include <optional>

#include "geokernels/space.hpp"

namespace geokernels {

// Seeded samplers. Element i draws from Rng::substream(seed, i), so samples
// are reproducible across platforms and prefixes agree across sizes.
//
//   sphere/projective  standard normal vectors, normalized
//   hyperbolic         normal tangent vector at the base point pushed
//                      through the exponential map
//   spd                G^T G + 1e-3 I with G standard normal d x d
//   grassmann          QR orthonormalization of a standard normal
//                      (ambient x k) matrix, uniform by orthogonal invariance
//   euclidean/lq       standard normal
//
// graph, tree and string kinds have dedicated builders below; asking
// sample_points for them is an UnsupportedError.
PointSet sample_points(const SpaceSpec& space, int n, std::uint64_t seed);

struct NeighborRule {
  enum class Kind { kEpsilon, kNearest } kind = Kind::kEpsilon;
  double epsilon = 0.0;
  int k = 0;

  static NeighborRule eps(double e) { return {Kind::kEpsilon, e, 0}; }
  static NeighborRule knn(int k) { return {Kind::kNearest, 0.0, k}; }
};

// Edges between Euclidean points within epsilon (or symmetrized k-nearest),
// weighted by Euclidean distance. A disconnected result is a ValidationError
// suggesting a larger epsilon/k.
WeightedGraph build_neighbor_graph(const PointSet& points, const NeighborRule& rule);

// Distance matrix of a point set under its own metric, or under
// `variant_override` to reuse one sample across metric variants.
DistanceMatrix pairwise_distances(const PointSet& points,
                                  std::optional<MetricVariant> variant_override = {});

// Random attachment tree: vertex v > 0 attaches to a uniform previous vertex
// with weight uniform in [0.5, 1.5).
PointSet sample_tree(int n, std::uint64_t seed);

// Uniform strings over {a, b, c} with lengths uniform in [3, 9].
PointSet sample_strings(int n, std::uint64_t seed);

// Planar two-cluster Gaussian mixture (first half / second half), axis
// standard deviations sigma, second cluster shifted by `offset`.
struct MixtureParams {
  Eigen::Vector2d sigma{1.5, 0.25};
  Eigen::Vector2d offset{1.5, 2.0};
};

PointSet sample_two_cluster_cloud(int n, std::uint64_t seed,
                                  const MixtureParams& params = {});

}  // namespace geokernels

#endif
