#include "geokernels/sampling.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "geokernels/errors.hpp"
#include "geokernels/manifolds.hpp"
#include "geokernels/rng.hpp"

namespace geokernels {

namespace {

Eigen::VectorXd normal_vector(Rng& rng, int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal();
  return v;
}

Eigen::MatrixXd normal_matrix(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  // row-major fill so the draw order is part of the documented stream
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
  }
  return m;
}

Eigen::VectorXd hyperboloid_exp(const Eigen::VectorXd& tangent) {
  // exponential map at the base point (1, 0, ..., 0); tangent holds the
  // spatial coordinates
  const int dim = static_cast<int>(tangent.size());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim + 1);
  const double r = tangent.norm();
  x(0) = std::cosh(r);
  if (r > 0.0) {
    x.tail(dim) = (std::sinh(r) / r) * tangent;
  }
  return x;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& g) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(g.rows(), g.cols());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(g.cols());
  for (int j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace

PointSet sample_points(const SpaceSpec& space, int n, std::uint64_t seed) {
  space.validate();
  if (n < 1) {
    throw ValidationError("sample size must be >= 1, got " + std::to_string(n));
  }
  PointSet points;
  points.space = space;
  switch (space.kind) {
    case SpaceKind::kEuclidean:
    case SpaceKind::kLq:
      for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        points.vectors.push_back(normal_vector(rng, space.dim));
      }
      break;
    case SpaceKind::kSphere:
    case SpaceKind::kProjective:
      for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        Eigen::VectorXd v = normal_vector(rng, space.dim);
        points.vectors.push_back(v / v.norm());
      }
      break;
    case SpaceKind::kHyperbolic:
      for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        points.vectors.push_back(hyperboloid_exp(normal_vector(rng, space.dim)));
      }
      break;
    case SpaceKind::kSpd:
      for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        const Eigen::MatrixXd g = normal_matrix(rng, space.dim, space.dim);
        points.matrices.push_back(
            g.transpose() * g + 1e-3 * Eigen::MatrixXd::Identity(space.dim, space.dim));
      }
      break;
    case SpaceKind::kGrassmann:
      for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        points.matrices.push_back(
            orthonormalize(normal_matrix(rng, space.dim, space.subspace_dim)));
      }
      break;
    default:
      throw UnsupportedError("no direct sampler for " + to_string(space.kind) +
                             "; use the dedicated builder");
  }
  points.validate();
  return points;
}

WeightedGraph build_neighbor_graph(const PointSet& points, const NeighborRule& rule) {
  if (points.space.kind != SpaceKind::kEuclidean) {
    throw ValidationError("neighbor graphs are built over euclidean point sets");
  }
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    throw ValidationError("neighbor graph needs at least 2 points");
  }
  WeightedGraph graph(n);
  if (rule.kind == NeighborRule::Kind::kEpsilon) {
    if (!(rule.epsilon > 0.0)) {
      throw ValidationError("epsilon must be positive");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dist = (points.vectors[i] - points.vectors[j]).norm();
        if (dist <= rule.epsilon) graph.add_edge(i, j, dist);
      }
    }
  } else {
    if (rule.k < 1) {
      throw ValidationError("k must be >= 1");
    }
    std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<double, int>> order;
      order.reserve(n - 1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        order.emplace_back((points.vectors[i] - points.vectors[j]).norm(), j);
      }
      std::sort(order.begin(), order.end());
      const int take = std::min<int>(rule.k, static_cast<int>(order.size()));
      for (int t = 0; t < take; ++t) {
        const int j = order[t].second;
        linked[std::min(i, j)][std::max(i, j)] = 1;  // symmetrized union
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (linked[i][j]) {
          graph.add_edge(i, j, (points.vectors[i] - points.vectors[j]).norm());
        }
      }
    }
  }
  if (!graph.is_connected()) {
    throw ValidationError(
        rule.kind == NeighborRule::Kind::kEpsilon
            ? "neighbor graph is disconnected; increase epsilon"
            : "neighbor graph is disconnected; increase k");
  }
  return graph;
}

DistanceMatrix pairwise_distances(const PointSet& points,
                                  std::optional<MetricVariant> variant_override) {
  points.validate();
  SpaceSpec space = points.space;
  if (variant_override) {
    space.variant = *variant_override;
    space.validate();
  }
  const int n = static_cast<int>(points.size());

  if (space.kind == SpaceKind::kGraph) {
    DistanceMatrix d = graph_shortest_paths(points.graph);
    d.space = space;
    return d;
  }

  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dist = 0.0;
      switch (space.kind) {
        case SpaceKind::kSpd:
        case SpaceKind::kGrassmann:
          dist = space_distance(space, points.matrices[i], points.matrices[j]);
          break;
        case SpaceKind::kString:
          dist = edit_distance(points.strings[i], points.strings[j]);
          break;
        case SpaceKind::kTree:
          dist = tree_distance(points.graph, i, j);
          break;
        default:
          dist = space_distance(space, points.vectors[i], points.vectors[j]);
      }
      entries(i, j) = entries(j, i) = dist;
    }
  }
  DistanceMatrix d{std::move(entries), space};
  d.validate();
  return d;
}

PointSet sample_tree(int n, std::uint64_t seed) {
  if (n < 1) {
    throw ValidationError("tree sample needs n >= 1");
  }
  PointSet points;
  points.space = tree_space();
  WeightedGraph tree(n);
  for (int v = 1; v < n; ++v) {
    Rng rng = Rng::substream(seed, v);
    const int parent = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(v)));
    const double weight = 0.5 + rng.uniform01();
    tree.add_edge(parent, v, weight);
  }
  points.graph = std::move(tree);
  points.validate();
  return points;
}

PointSet sample_strings(int n, std::uint64_t seed) {
  if (n < 1) {
    throw ValidationError("string sample needs n >= 1");
  }
  static constexpr char kAlphabet[] = {'a', 'b', 'c'};
  PointSet points;
  points.space = string_space();
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::substream(seed, i);
    const std::size_t len = 3 + rng.uniform_int(7);  // [3, 9]
    std::string s;
    s.reserve(len);
    for (std::size_t c = 0; c < len; ++c) {
      s.push_back(kAlphabet[rng.uniform_int(3)]);
    }
    points.strings.push_back(std::move(s));
  }
  points.validate();
  return points;
}

PointSet sample_two_cluster_cloud(int n, std::uint64_t seed,
                                  const MixtureParams& params) {
  if (n < 2) {
    throw ValidationError("cloud sample needs n >= 2");
  }
  PointSet points;
  points.space = euclidean_space(2);
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::substream(seed, i);
    Eigen::VectorXd x(2);
    x(0) = rng.normal() * params.sigma(0);
    x(1) = rng.normal() * params.sigma(1);
    if (i >= n / 2) {
      x += params.offset;
    }
    points.vectors.push_back(std::move(x));
  }
  points.validate();
  return points;
}

}  // namespace geokernels
