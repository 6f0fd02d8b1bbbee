#ifndef GEOKERNELS_MANIFOLDS_HPP
#define GEOKERNELS_MANIFOLDS_HPP

#include <Eigen/Core>
#include <string_view>

#include "geokernels/space.hpp"

namespace geokernels {

// Closed-form geodesic distances.
//
// Every function validates its inputs and throws ValidationError with the
// offending quantity in the message. All are symmetric, vanish exactly on
// identical inputs, and satisfy the triangle inequality.

// Great-circle distance arccos<x,y> on unit vectors; range [0, pi].
double sphere_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Distance between lines: arccos|<x,y>| on unit representatives; [0, pi/2].
double projective_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Minkowski bilinear form -x0*y0 + sum_i xi*yi.
double minkowski_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Hyperboloid-model distance arcosh(-<x,y>_M). Points must satisfy
// <x,x>_M = -1 (within 1e-9) with positive leading coordinate.
double hyperbolic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Distance between symmetric positive definite matrices.
//   frobenius:        ||A - B||_F
//   log_euclidean:    ||logm A - logm B||_F
//   affine_invariant: ||logm(A^-1/2 B A^-1/2)||_F
//   fisher:           affine_invariant / sqrt(2)   (fixed-mean Gaussian families)
double spd_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    MetricVariant variant);

// Principal-angle distances between subspaces given as orthonormal frames.
//   intrinsic: ||theta||_2, chordal: sqrt(sum sin^2 theta_i)
double grassmann_distance(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v,
                          MetricVariant variant);

// (sum |x_i - y_i|^q)^(1/q) for q > 2. q <= 2 is a DomainError; use the
// euclidean kind for q = 2.
double lq_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double q_norm);

// Levenshtein distance with unit insert/delete/substitute costs.
int edit_distance(std::string_view s, std::string_view t);

// Weight of the unique path between two vertices of a tree.
double tree_distance(const WeightedGraph& tree, int a, int b);

// All-pairs shortest paths of a connected graph (Dijkstra per source).
// A disconnected graph is an error naming two unreachable vertices.
DistanceMatrix graph_shortest_paths(const WeightedGraph& g);

// Matrix log / exp of symmetric (positive definite) matrices via symmetric
// eigendecomposition. Eigenvalues are clamped below at 1e-14 before the log.
Eigen::MatrixXd spd_log(const Eigen::MatrixXd& a);
Eigen::MatrixXd spd_exp(const Eigen::MatrixXd& s);
// A^p for symmetric positive definite A.
Eigen::MatrixXd spd_power(const Eigen::MatrixXd& a, double p);

// Dispatch to the metric of the space an element lives in.
double space_distance(const SpaceSpec& space, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& y);
double space_distance(const SpaceSpec& space, const Eigen::MatrixXd& x,
                      const Eigen::MatrixXd& y);

// Point at arc-length fraction t in [0,1] along the minimizing geodesic
// from x to y. Supported kinds: euclidean, sphere, hyperbolic (vector
// overload) and spd with frobenius / log_euclidean / affine_invariant
// (matrix overload). Antipodal sphere endpoints raise DomainError
// ("geodesic not unique"); any other kind raises UnsupportedError.
Eigen::VectorXd geodesic_interpolate(const SpaceSpec& space, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& y, double t);
Eigen::MatrixXd geodesic_interpolate(const SpaceSpec& space, const Eigen::MatrixXd& a,
                                     const Eigen::MatrixXd& b, double t);

}  // namespace geokernels

#endif
