#ifndef GEOKERNELS_TESTS_ROW_CONFIGS_HPP
#define GEOKERNELS_TESTS_ROW_CONFIGS_HPP

// Desk-scale sampling configurations, one per implemented space/metric row,
// shared by the conformance suite and the acceptance runner.

#include <algorithm>
#include <functional>
#include <vector>

#include "geokernels/sampling.hpp"

namespace rowconfig {

// largest MST edge = connectivity threshold of the epsilon graph
inline double mst_threshold(const geokernels::PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<char> done(n, 0);
  std::vector<double> key(n, 1e300);
  key[0] = 0.0;
  double worst = 0.0;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[v] && (best < 0 || key[v] < key[best])) best = v;
    }
    done[best] = 1;
    worst = std::max(worst, key[best]);
    for (int v = 0; v < n; ++v) {
      if (!done[v]) {
        key[v] = std::min(key[v], (pts.vectors[best] - pts.vectors[v]).norm());
      }
    }
  }
  return worst;
}

inline geokernels::DistanceMatrix graph_row_distances(int n, std::uint64_t seed) {
  using namespace geokernels;
  const PointSet cloud = sample_two_cluster_cloud(n, seed);
  PointSet graph;
  graph.space = graph_space();
  graph.graph =
      build_neighbor_graph(cloud, NeighborRule::eps(1.2 * mst_threshold(cloud)));
  return pairwise_distances(graph);
}

struct Row {
  const char* name;
  bool gaussian_pd;   // expected "PD at every tested bandwidth"
  bool laplacian_pd;
  std::function<geokernels::DistanceMatrix(int, std::uint64_t)> distances;
};

inline std::vector<Row> table_rows() {
  using namespace geokernels;
  const auto sample_row = [](SpaceSpec space) {
    return [space](int n, std::uint64_t seed) {
      return pairwise_distances(sample_points(space, n, seed));
    };
  };
  return {
      {"euclidean", true, true, sample_row(euclidean_space(3))},
      {"lq q=3", false, false, sample_row(lq_space(3, 3.0))},
      {"sphere", false, true, sample_row(sphere_space(3))},
      {"projective", false, false, sample_row(projective_space(3))},
      {"grassmann", false, false,
       sample_row(grassmann_space(4, 2, MetricVariant::kIntrinsic))},
      {"spd frobenius", true, true, sample_row(spd_space(3, MetricVariant::kFrobenius))},
      {"spd log-euclidean", true, true,
       sample_row(spd_space(3, MetricVariant::kLogEuclidean))},
      {"spd affine-invariant", false, false,
       sample_row(spd_space(3, MetricVariant::kAffineInvariant))},
      {"spd fisher", false, false, sample_row(spd_space(3, MetricVariant::kFisher))},
      {"hyperbolic", false, true, sample_row(hyperbolic_space(3))},
      {"tree", false, true,
       [](int n, std::uint64_t seed) { return pairwise_distances(sample_tree(n, seed)); }},
      {"graph", false, false, graph_row_distances},
      {"string", false, false, [](int n, std::uint64_t seed) {
         return pairwise_distances(sample_strings(n, seed));
       }},
  };
}

}  // namespace rowconfig

#endif
