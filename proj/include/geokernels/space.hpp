#ifndef GEOKERNELS_SPACE_HPP
#define GEOKERNELS_SPACE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace geokernels {

enum class SpaceKind {
  kEuclidean,
  kLq,
  kSphere,
  kProjective,
  kHyperbolic,
  kSpd,
  kGrassmann,
  kGraph,
  kTree,
  kString,
};

// Metric choice for the kinds that have more than one.
enum class MetricVariant {
  kNone,
  kFrobenius,        // spd
  kLogEuclidean,     // spd
  kAffineInvariant,  // spd
  kFisher,           // spd
  kIntrinsic,        // grassmann
  kChordal,          // grassmann
};

std::string to_string(SpaceKind kind);
std::string to_string(MetricVariant variant);
SpaceKind parse_space_kind(const std::string& name);
MetricVariant parse_metric_variant(const std::string& name);

// Which metric space a sample lives in.
//
// `dim` is the ambient vector length for euclidean/lq/sphere/projective,
// the intrinsic dimension for hyperbolic (points carry dim+1 coordinates),
// the matrix side for spd, and the ambient dimension for grassmann, whose
// subspace dimension is `subspace_dim`.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::kEuclidean;
  int dim = 0;
  MetricVariant variant = MetricVariant::kNone;
  double q_norm = 0.0;   // lq only, must be > 2
  int subspace_dim = 0;  // grassmann only

  // Throws ValidationError when the fields are inconsistent.
  void validate() const;

  std::string label() const;  // e.g. "spd(3,affine_invariant)"

  bool operator==(const SpaceSpec&) const = default;
};

SpaceSpec euclidean_space(int dim);
SpaceSpec lq_space(int dim, double q_norm);
SpaceSpec sphere_space(int ambient_dim);
SpaceSpec projective_space(int ambient_dim);
SpaceSpec hyperbolic_space(int intrinsic_dim);
SpaceSpec spd_space(int dim, MetricVariant variant);
SpaceSpec grassmann_space(int ambient_dim, int subspace_dim, MetricVariant variant);
SpaceSpec graph_space();
SpaceSpec tree_space();
SpaceSpec string_space();

// Undirected graph with positive edge weights and no self-loops.
class WeightedGraph {
 public:
  struct Edge {
    int u;
    int v;
    double weight;
  };

  WeightedGraph() = default;
  explicit WeightedGraph(int vertex_count);

  void add_edge(int u, int v, double weight);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // adjacency[v] = list of (neighbor, weight)
  std::vector<std::vector<std::pair<int, double>>> adjacency() const;

  bool is_connected() const;
  // n-1 edges and connected.
  bool is_tree() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// A homogeneous sample: n elements of one space. Exactly one of the element
// containers is populated, selected by space.kind; graph/tree samples carry
// the graph itself and the elements are its vertices.
struct PointSet {
  SpaceSpec space;
  std::vector<Eigen::VectorXd> vectors;   // euclidean, lq, sphere, projective, hyperbolic
  std::vector<Eigen::MatrixXd> matrices;  // spd, grassmann
  std::vector<std::string> strings;       // string
  WeightedGraph graph;                    // graph, tree

  std::size_t size() const;

  // Checks every element against the space (unit norms, Minkowski norm,
  // positive definiteness, orthonormal frames). Throws ValidationError.
  void validate() const;
};

// Symmetric nonnegative matrix with zero diagonal plus the space it came from.
struct DistanceMatrix {
  Eigen::MatrixXd entries;
  SpaceSpec space;

  int size() const { return static_cast<int>(entries.rows()); }

  // Symmetry within 1e-12, zero diagonal, nonnegative entries.
  void validate() const;
};

}  // namespace geokernels

#endif
