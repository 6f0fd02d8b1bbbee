#include "geokernels/manifolds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "geokernels/errors.hpp"

namespace geokernels {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kLogFloor = 1e-14;

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

void require_unit(const Eigen::VectorXd& v, const char* which) {
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw ValidationError(std::string(which) + " is not a unit vector: norm = " +
                          std::to_string(norm));
  }
}

void require_same_size(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) {
    throw ValidationError("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()));
  }
}

void require_hyperboloid(const Eigen::VectorXd& x, const char* which) {
  if (x.size() < 2) {
    throw ValidationError(std::string(which) + " needs at least two coordinates");
  }
  const double m = -x(0) * x(0) + x.tail(x.size() - 1).squaredNorm();
  if (std::abs(m + 1.0) > kUnitTol || x(0) <= 0.0) {
    throw ValidationError(std::string(which) + " is off the hyperboloid: <x,x> = " +
                          std::to_string(m) + ", x0 = " + std::to_string(x(0)));
  }
}

// Symmetric eigendecomposition with a positivity check; `what` names the
// argument in error messages.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spd_eigs(const Eigen::MatrixXd& a,
                                                        const char* what) {
  if (a.rows() != a.cols()) {
    throw ValidationError(std::string(what) + " is not square");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > kUnitTol * scale) {
    throw ValidationError(std::string(what) + " is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const double lo = es.eigenvalues().minCoeff();
  if (lo <= 0.0) {
    throw ValidationError(std::string(what) +
                          " is not positive definite: min eigenvalue = " +
                          std::to_string(lo));
  }
  return es;
}

void require_frame(const Eigen::MatrixXd& u, const char* which) {
  const Eigen::MatrixXd gram = u.transpose() * u;
  const double dev =
      (gram - Eigen::MatrixXd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > kUnitTol) {
    throw ValidationError(std::string(which) +
                          " is not an orthonormal frame: max |U^T U - I| = " +
                          std::to_string(dev));
  }
}

Eigen::VectorXd principal_angles(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(u.transpose() * v);
  Eigen::VectorXd angles = svd.singularValues();
  for (Eigen::Index i = 0; i < angles.size(); ++i) {
    angles(i) = std::acos(clamp(angles(i), 0.0, 1.0));
  }
  return angles;
}

// ||logm(A^-1/2 B A^-1/2)||_F through an explicit whitening; the whitened
// matrix is symmetrized before its eigensolve to absorb round-off.
double affine_invariant_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const auto ea = spd_eigs(a, "first argument");
  spd_eigs(b, "second argument");
  Eigen::VectorXd inv_sqrt = ea.eigenvalues();
  for (Eigen::Index i = 0; i < inv_sqrt.size(); ++i) {
    inv_sqrt(i) = 1.0 / std::sqrt(std::max(inv_sqrt(i), kLogFloor));
  }
  const Eigen::MatrixXd w =
      ea.eigenvectors() * inv_sqrt.asDiagonal() * ea.eigenvectors().transpose();
  Eigen::MatrixXd m = w * b * w;
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(m, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < em.eigenvalues().size(); ++i) {
    const double lg = std::log(std::max(em.eigenvalues()(i), kLogFloor));
    sum += lg * lg;
  }
  return std::sqrt(sum);
}

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj,
                             int source) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(adj.size(), kInf);
  dist[source] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const auto& [u, w] : adj[v]) {
      if (d + w < dist[u]) {
        dist[u] = d + w;
        heap.emplace(dist[u], u);
      }
    }
  }
  return dist;
}

}  // namespace

double sphere_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_same_size(x, y);
  require_unit(x, "first argument");
  require_unit(y, "second argument");
  return std::acos(clamp(x.dot(y), -1.0, 1.0));
}

double projective_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_same_size(x, y);
  require_unit(x, "first argument");
  require_unit(y, "second argument");
  return std::acos(clamp(std::abs(x.dot(y)), 0.0, 1.0));
}

double minkowski_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return -x(0) * y(0) + x.tail(x.size() - 1).dot(y.tail(y.size() - 1));
}

double hyperbolic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_same_size(x, y);
  require_hyperboloid(x, "first argument");
  require_hyperboloid(y, "second argument");
  return std::acosh(std::max(1.0, -minkowski_dot(x, y)));
}

double spd_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    MetricVariant variant) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("spd arguments have different dimensions");
  }
  switch (variant) {
    case MetricVariant::kFrobenius: {
      spd_eigs(a, "first argument");
      spd_eigs(b, "second argument");
      return (a - b).norm();
    }
    case MetricVariant::kLogEuclidean:
      return (spd_log(a) - spd_log(b)).norm();
    case MetricVariant::kAffineInvariant:
      return affine_invariant_distance(a, b);
    case MetricVariant::kFisher:
      // same log-eigenvalues, normalized for the fixed-mean Gaussian family
      return affine_invariant_distance(a, b) / std::numbers::sqrt2;
    default:
      throw ValidationError("not a spd metric variant: " + to_string(variant));
  }
}

double grassmann_distance(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v,
                          MetricVariant variant) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ValidationError("frames have different shapes");
  }
  require_frame(u, "first argument");
  require_frame(v, "second argument");
  const Eigen::VectorXd theta = principal_angles(u, v);
  if (variant == MetricVariant::kIntrinsic) {
    return theta.norm();
  }
  if (variant == MetricVariant::kChordal) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
      const double s = std::sin(theta(i));
      sum += s * s;
    }
    return std::sqrt(sum);
  }
  throw ValidationError("not a grassmann metric variant: " + to_string(variant));
}

double lq_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double q_norm) {
  require_same_size(x, y);
  if (!(q_norm > 2.0)) {
    throw DomainError("lq_distance requires q_norm > 2 (got " + std::to_string(q_norm) +
                      "); use the euclidean kind instead");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += std::pow(std::abs(x(i) - y(i)), q_norm);
  }
  return std::pow(sum, 1.0 / q_norm);
}

int edit_distance(std::string_view s, std::string_view t) {
  const std::size_t m = t.size();
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = prev[j - 1] + (s[i - 1] != t[j - 1]);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double tree_distance(const WeightedGraph& tree, int a, int b) {
  if (!tree.is_tree()) {
    throw ValidationError("input is not a tree (needs n-1 edges and connectivity)");
  }
  if (a < 0 || b < 0 || a >= tree.vertex_count() || b >= tree.vertex_count()) {
    throw ValidationError("vertex index out of range");
  }
  const auto dist = dijkstra(tree.adjacency(), a);
  return dist[b];
}

DistanceMatrix graph_shortest_paths(const WeightedGraph& g) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency();
  Eigen::MatrixXd d(n, n);
  for (int s = 0; s < n; ++s) {
    const auto dist = dijkstra(adj, s);
    for (int v = 0; v < n; ++v) {
      if (!std::isfinite(dist[v])) {
        throw ValidationError("graph is disconnected: no path from vertex " +
                              std::to_string(s) + " to vertex " + std::to_string(v));
      }
      d(s, v) = dist[v];
    }
  }
  d = 0.5 * (d + d.transpose());  // Dijkstra is exact; this removes float jitter
  DistanceMatrix out{std::move(d), graph_space()};
  out.validate();
  return out;
}

Eigen::MatrixXd spd_log(const Eigen::MatrixXd& a) {
  const auto es = spd_eigs(a, "matrix log argument");
  Eigen::VectorXd logs = es.eigenvalues();
  for (Eigen::Index i = 0; i < logs.size(); ++i) {
    logs(i) = std::log(std::max(logs(i), kLogFloor));
  }
  return es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd spd_exp(const Eigen::MatrixXd& s) {
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > kUnitTol * scale) {
    throw ValidationError("matrix exp argument is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  Eigen::VectorXd exps = es.eigenvalues();
  for (Eigen::Index i = 0; i < exps.size(); ++i) {
    exps(i) = std::exp(exps(i));
  }
  return es.eigenvectors() * exps.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd spd_power(const Eigen::MatrixXd& a, double p) {
  const auto es = spd_eigs(a, "matrix power argument");
  Eigen::VectorXd pows = es.eigenvalues();
  for (Eigen::Index i = 0; i < pows.size(); ++i) {
    pows(i) = std::pow(std::max(pows(i), kLogFloor), p);
  }
  return es.eigenvectors() * pows.asDiagonal() * es.eigenvectors().transpose();
}

double space_distance(const SpaceSpec& space, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& y) {
  switch (space.kind) {
    case SpaceKind::kEuclidean:
      require_same_size(x, y);
      return (x - y).norm();
    case SpaceKind::kLq: return lq_distance(x, y, space.q_norm);
    case SpaceKind::kSphere: return sphere_distance(x, y);
    case SpaceKind::kProjective: return projective_distance(x, y);
    case SpaceKind::kHyperbolic: return hyperbolic_distance(x, y);
    default:
      throw UnsupportedError("no vector distance for " + to_string(space.kind));
  }
}

double space_distance(const SpaceSpec& space, const Eigen::MatrixXd& x,
                      const Eigen::MatrixXd& y) {
  switch (space.kind) {
    case SpaceKind::kSpd: return spd_distance(x, y, space.variant);
    case SpaceKind::kGrassmann: return grassmann_distance(x, y, space.variant);
    default:
      throw UnsupportedError("no matrix distance for " + to_string(space.kind));
  }
}

namespace {

Eigen::VectorXd sphere_interpolate(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                   double t) {
  const double angle = sphere_distance(x, y);
  if (angle > std::numbers::pi - 1e-9) {
    throw DomainError("geodesic not unique: endpoints are antipodal");
  }
  if (angle < 1e-15) return x;
  const double s = std::sin(angle);
  Eigen::VectorXd p =
      (std::sin((1.0 - t) * angle) / s) * x + (std::sin(t * angle) / s) * y;
  return p / p.norm();
}

Eigen::VectorXd hyperbolic_interpolate(const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& y, double t) {
  const double len = hyperbolic_distance(x, y);
  if (len < 1e-15) return x;
  const double s = std::sinh(len);
  return (std::sinh((1.0 - t) * len) / s) * x + (std::sinh(t * len) / s) * y;
}

}  // namespace

Eigen::VectorXd geodesic_interpolate(const SpaceSpec& space, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& y, double t) {
  if (t < 0.0 || t > 1.0) {
    throw DomainError("interpolation parameter must lie in [0, 1], got " +
                      std::to_string(t));
  }
  switch (space.kind) {
    case SpaceKind::kEuclidean:
      require_same_size(x, y);
      return (1.0 - t) * x + t * y;
    case SpaceKind::kSphere:
      return sphere_interpolate(x, y, t);
    case SpaceKind::kHyperbolic:
      return hyperbolic_interpolate(x, y, t);
    default:
      throw UnsupportedError("geodesic interpolation is not available for " +
                             to_string(space.kind));
  }
}

Eigen::MatrixXd geodesic_interpolate(const SpaceSpec& space, const Eigen::MatrixXd& a,
                                     const Eigen::MatrixXd& b, double t) {
  if (t < 0.0 || t > 1.0) {
    throw DomainError("interpolation parameter must lie in [0, 1], got " +
                      std::to_string(t));
  }
  if (space.kind != SpaceKind::kSpd) {
    throw UnsupportedError("matrix interpolation is only defined for spd spaces");
  }
  switch (space.variant) {
    case MetricVariant::kFrobenius:
      spd_eigs(a, "first argument");
      spd_eigs(b, "second argument");
      return (1.0 - t) * a + t * b;  // the cone is convex
    case MetricVariant::kLogEuclidean:
      return spd_exp((1.0 - t) * spd_log(a) + t * spd_log(b));
    case MetricVariant::kAffineInvariant: {
      // A^1/2 (A^-1/2 B A^-1/2)^t A^1/2
      const Eigen::MatrixXd half = spd_power(a, 0.5);
      const Eigen::MatrixXd inv_half = spd_power(a, -0.5);
      Eigen::MatrixXd m = inv_half * b * inv_half;
      m = 0.5 * (m + m.transpose());
      return half * spd_power(m, t) * half;
    }
    default:
      throw UnsupportedError("geodesic interpolation is not available for spd variant " +
                             to_string(space.variant));
  }
}

}  // namespace geokernels
