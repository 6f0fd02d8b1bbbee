#include "geokernels/space.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "geokernels/errors.hpp"

namespace geokernels {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kEuclidean: return "euclidean";
    case SpaceKind::kLq: return "lq";
    case SpaceKind::kSphere: return "sphere";
    case SpaceKind::kProjective: return "projective";
    case SpaceKind::kHyperbolic: return "hyperbolic";
    case SpaceKind::kSpd: return "spd";
    case SpaceKind::kGrassmann: return "grassmann";
    case SpaceKind::kGraph: return "graph";
    case SpaceKind::kTree: return "tree";
    case SpaceKind::kString: return "string";
  }
  return "unknown";
}

std::string to_string(MetricVariant variant) {
  switch (variant) {
    case MetricVariant::kNone: return "none";
    case MetricVariant::kFrobenius: return "frobenius";
    case MetricVariant::kLogEuclidean: return "log_euclidean";
    case MetricVariant::kAffineInvariant: return "affine_invariant";
    case MetricVariant::kFisher: return "fisher";
    case MetricVariant::kIntrinsic: return "intrinsic";
    case MetricVariant::kChordal: return "chordal";
  }
  return "unknown";
}

SpaceKind parse_space_kind(const std::string& name) {
  for (SpaceKind k :
       {SpaceKind::kEuclidean, SpaceKind::kLq, SpaceKind::kSphere,
        SpaceKind::kProjective, SpaceKind::kHyperbolic, SpaceKind::kSpd,
        SpaceKind::kGrassmann, SpaceKind::kGraph, SpaceKind::kTree,
        SpaceKind::kString}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown space kind: " + name);
}

MetricVariant parse_metric_variant(const std::string& name) {
  for (MetricVariant v :
       {MetricVariant::kNone, MetricVariant::kFrobenius, MetricVariant::kLogEuclidean,
        MetricVariant::kAffineInvariant, MetricVariant::kFisher,
        MetricVariant::kIntrinsic, MetricVariant::kChordal}) {
    if (to_string(v) == name) return v;
  }
  throw ValidationError("unknown metric variant: " + name);
}

void SpaceSpec::validate() const {
  const bool needs_dim = kind != SpaceKind::kGraph && kind != SpaceKind::kTree &&
                         kind != SpaceKind::kString;
  if (needs_dim && dim < 1) {
    throw ValidationError("space " + to_string(kind) + " requires dim >= 1, got " +
                          std::to_string(dim));
  }
  if (kind == SpaceKind::kLq && !(q_norm > 2.0)) {
    throw ValidationError("lq space requires q_norm > 2, got " + std::to_string(q_norm));
  }
  const bool has_variant = variant != MetricVariant::kNone;
  if (kind == SpaceKind::kSpd) {
    if (variant != MetricVariant::kFrobenius && variant != MetricVariant::kLogEuclidean &&
        variant != MetricVariant::kAffineInvariant && variant != MetricVariant::kFisher) {
      throw ValidationError("spd space requires a spd metric variant, got " +
                            to_string(variant));
    }
  } else if (kind == SpaceKind::kGrassmann) {
    if (variant != MetricVariant::kIntrinsic && variant != MetricVariant::kChordal) {
      throw ValidationError("grassmann space requires intrinsic or chordal, got " +
                            to_string(variant));
    }
    if (subspace_dim < 1 || subspace_dim > dim) {
      throw ValidationError("grassmann subspace_dim must be in [1, dim], got " +
                            std::to_string(subspace_dim));
    }
  } else if (has_variant) {
    throw ValidationError("metric variant only applies to spd/grassmann spaces");
  }
}

std::string SpaceSpec::label() const {
  std::ostringstream out;
  out << to_string(kind);
  switch (kind) {
    case SpaceKind::kLq:
      out << "(" << dim << ",q=" << q_norm << ")";
      break;
    case SpaceKind::kSpd:
      out << "(" << dim << "," << to_string(variant) << ")";
      break;
    case SpaceKind::kGrassmann:
      out << "(" << dim << "," << subspace_dim << "," << to_string(variant) << ")";
      break;
    case SpaceKind::kGraph:
    case SpaceKind::kTree:
    case SpaceKind::kString:
      break;
    default:
      out << "(" << dim << ")";
  }
  return out.str();
}

SpaceSpec euclidean_space(int dim) { return {SpaceKind::kEuclidean, dim}; }

SpaceSpec lq_space(int dim, double q_norm) {
  SpaceSpec s{SpaceKind::kLq, dim};
  s.q_norm = q_norm;
  s.validate();
  return s;
}

SpaceSpec sphere_space(int ambient_dim) { return {SpaceKind::kSphere, ambient_dim}; }

SpaceSpec projective_space(int ambient_dim) {
  return {SpaceKind::kProjective, ambient_dim};
}

SpaceSpec hyperbolic_space(int intrinsic_dim) {
  return {SpaceKind::kHyperbolic, intrinsic_dim};
}

SpaceSpec spd_space(int dim, MetricVariant variant) {
  SpaceSpec s{SpaceKind::kSpd, dim, variant};
  s.validate();
  return s;
}

SpaceSpec grassmann_space(int ambient_dim, int subspace_dim, MetricVariant variant) {
  SpaceSpec s{SpaceKind::kGrassmann, ambient_dim, variant};
  s.subspace_dim = subspace_dim;
  s.validate();
  return s;
}

SpaceSpec graph_space() { return {SpaceKind::kGraph, 0}; }
SpaceSpec tree_space() { return {SpaceKind::kTree, 0}; }
SpaceSpec string_space() { return {SpaceKind::kString, 0}; }

WeightedGraph::WeightedGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) {
    throw ValidationError("graph needs at least one vertex");
  }
}

void WeightedGraph::add_edge(int u, int v, double weight) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw ValidationError("edge endpoint out of range");
  }
  if (u == v) {
    throw ValidationError("self-loop at vertex " + std::to_string(u));
  }
  if (!(weight > 0.0)) {
    throw ValidationError("edge weight must be positive, got " + std::to_string(weight));
  }
  edges_.push_back({u, v, weight});
}

std::vector<std::vector<std::pair<int, double>>> WeightedGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, double>>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

bool WeightedGraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  const auto adj = adjacency();
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertex_count_;
}

bool WeightedGraph::is_tree() const {
  return static_cast<int>(edges_.size()) == vertex_count_ - 1 && is_connected();
}

std::size_t PointSet::size() const {
  switch (space.kind) {
    case SpaceKind::kSpd:
    case SpaceKind::kGrassmann:
      return matrices.size();
    case SpaceKind::kString:
      return strings.size();
    case SpaceKind::kGraph:
    case SpaceKind::kTree:
      return static_cast<std::size_t>(graph.vertex_count());
    default:
      return vectors.size();
  }
}

namespace {

constexpr double kUnitTol = 1e-9;

void check_vector_sizes(const std::vector<Eigen::VectorXd>& vectors, int dim) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      throw ValidationError("element " + std::to_string(i) + " has dimension " +
                            std::to_string(vectors[i].size()) + ", expected " +
                            std::to_string(dim));
    }
  }
}

}  // namespace

void PointSet::validate() const {
  space.validate();
  switch (space.kind) {
    case SpaceKind::kEuclidean:
    case SpaceKind::kLq:
      check_vector_sizes(vectors, space.dim);
      break;
    case SpaceKind::kSphere:
    case SpaceKind::kProjective: {
      check_vector_sizes(vectors, space.dim);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        const double norm = vectors[i].norm();
        if (std::abs(norm - 1.0) > kUnitTol) {
          throw ValidationError("element " + std::to_string(i) + " has norm " +
                                std::to_string(norm) + ", expected unit");
        }
      }
      break;
    }
    case SpaceKind::kHyperbolic: {
      check_vector_sizes(vectors, space.dim + 1);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        const Eigen::VectorXd& x = vectors[i];
        const double m = -x(0) * x(0) + x.tail(x.size() - 1).squaredNorm();
        if (std::abs(m + 1.0) > kUnitTol || x(0) <= 0.0) {
          throw ValidationError("element " + std::to_string(i) +
                                " is off the hyperboloid: <x,x> = " + std::to_string(m) +
                                ", x0 = " + std::to_string(x(0)));
        }
      }
      break;
    }
    case SpaceKind::kSpd: {
      for (std::size_t i = 0; i < matrices.size(); ++i) {
        const Eigen::MatrixXd& a = matrices[i];
        if (a.rows() != space.dim || a.cols() != space.dim) {
          throw ValidationError("element " + std::to_string(i) + " is not " +
                                std::to_string(space.dim) + "x" + std::to_string(space.dim));
        }
        if ((a - a.transpose()).cwiseAbs().maxCoeff() > kUnitTol) {
          throw ValidationError("element " + std::to_string(i) + " is not symmetric");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        if (lo <= 0.0) {
          throw ValidationError("element " + std::to_string(i) +
                                " is not positive definite: min eigenvalue " +
                                std::to_string(lo));
        }
      }
      break;
    }
    case SpaceKind::kGrassmann: {
      for (std::size_t i = 0; i < matrices.size(); ++i) {
        const Eigen::MatrixXd& u = matrices[i];
        if (u.rows() != space.dim || u.cols() != space.subspace_dim) {
          throw ValidationError("frame " + std::to_string(i) + " is not " +
                                std::to_string(space.dim) + "x" +
                                std::to_string(space.subspace_dim));
        }
        const Eigen::MatrixXd gram = u.transpose() * u;
        const double dev =
            (gram - Eigen::MatrixXd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
        if (dev > kUnitTol) {
          throw ValidationError("frame " + std::to_string(i) +
                                " is not orthonormal: max |U^T U - I| = " +
                                std::to_string(dev));
        }
      }
      break;
    }
    case SpaceKind::kGraph:
      if (!graph.is_connected()) {
        throw ValidationError("graph sample must be connected");
      }
      break;
    case SpaceKind::kTree:
      if (!graph.is_tree()) {
        throw ValidationError("tree sample must be a connected acyclic graph");
      }
      break;
    case SpaceKind::kString:
      break;
  }
}

void DistanceMatrix::validate() const {
  const auto n = entries.rows();
  if (n != entries.cols()) {
    throw ValidationError("distance matrix must be square");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries(i, i) != 0.0) {
      throw ValidationError("nonzero diagonal at index " + std::to_string(i) + ": " +
                            std::to_string(entries(i, i)));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(entries(i, j) - entries(j, i)) > 1e-12) {
        throw ValidationError("asymmetry at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      if (entries(i, j) < 0.0 || !std::isfinite(entries(i, j))) {
        throw ValidationError("invalid entry at (" + std::to_string(i) + "," +
                              std::to_string(j) + "): " + std::to_string(entries(i, j)));
      }
    }
  }
}

}  // namespace geokernels
