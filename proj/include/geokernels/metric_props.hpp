#ifndef GEOKERNELS_METRIC_PROPS_HPP
#define GEOKERNELS_METRIC_PROPS_HPP

#include <Eigen/Core>
#include <vector>

#include "geokernels/space.hpp"

namespace geokernels {

// Result of scanning a square matrix against the metric axioms.
struct AxiomReport {
  int violations_symmetry = 0;
  int violations_diagonal = 0;
  int violations_nonnegative = 0;
  int violations_identity = 0;  // zero distance between distinct labels
  int violations_triangle = 0;
  double worst_triangle_slack = 0.0;  // min over triples of d(i,k)+d(k,j)-d(i,j)
  struct Triple {
    int i, k, j;
    double slack;
  };
  std::vector<Triple> worst_triples;  // up to 8, most negative first

  bool is_metric() const {
    return violations_symmetry == 0 && violations_diagonal == 0 &&
           violations_nonnegative == 0 && violations_triangle == 0;
  }
};

// Symmetry, zero diagonal, nonnegativity, identity of indiscernibles and
// the triangle inequality over all n^3 ordered triples (slack < -tol flags
// a violation).
AxiomReport check_metric_axioms(const Eigen::MatrixXd& d, double tol = 1e-9);

// A triangle with prescribed side lengths realized in the constant-curvature
// model space M_kappa: the plane for kappa = 0, the sphere of radius
// 1/sqrt(kappa) for kappa > 0, the hyperboloid scaled by 1/sqrt(-kappa) for
// kappa < 0. Vertices are stored in the model's coordinates (z = 0 plane
// coordinates, ambient R^3 sphere vectors, R^{2,1} hyperboloid vectors).
//
// Side convention: a = d(A,B), b = d(A,C), c = d(B,C).
struct ComparisonTriangle {
  double a = 0.0, b = 0.0, c = 0.0;
  double kappa = 0.0;
  Eigen::Vector3d vertex_a;
  Eigen::Vector3d vertex_b;
  Eigen::Vector3d vertex_c;

  double model_distance(const Eigen::Vector3d& u, const Eigen::Vector3d& v) const;
  // Point at arc-length fraction t on the model geodesic from u to v.
  Eigen::Vector3d model_interpolate(const Eigen::Vector3d& u,
                                    const Eigen::Vector3d& v, double t) const;
};

// Embeds side lengths (a, b, c) via the Euclidean, spherical or hyperbolic
// law of cosines. Requires the triangle inequality and, for kappa > 0,
// perimeter < 2*pi/sqrt(kappa). Degenerate (collinear or zero-side)
// triangles embed fine.
ComparisonTriangle comparison_triangle(double a, double b, double c, double kappa);

// One sampled comparison: point at fraction t of an edge, compared against
// the opposite vertex. slack = model distance - space distance; the
// comparison condition asks slack >= 0.
struct CatSample {
  int edge;  // 0: (p,q) against r, 1: (q,r) against p, 2: (p,r) against q
  double t;
  double slack;
};

struct CatReport {
  double kappa = 0.0;
  std::vector<CatSample> samples;
  double worst_slack = 0.0;
  bool satisfied = true;  // no slack below -1e-9
};

// Samples each edge of the geodesic triangle (p, q, r) at evenly spaced
// interior arc-length fractions (midpoint included for odd counts) and
// compares against the M_kappa triangle with the same side lengths.
CatReport cat_check(const SpaceSpec& space, const Eigen::VectorXd& p,
                    const Eigen::VectorXd& q, const Eigen::VectorXd& r,
                    double kappa, int samples_per_edge = 9);
CatReport cat_check(const SpaceSpec& space, const Eigen::MatrixXd& p,
                    const Eigen::MatrixXd& q, const Eigen::MatrixXd& r,
                    double kappa, int samples_per_edge = 9);

struct GeodesicReport {
  double length = 0.0;
  double max_deviation = 0.0;  // max |d(g(s), g(t)) - |s-t|*L| over the grid
  bool holds = true;           // max_deviation < 1e-8 * length
};

// Verifies d(gamma(s*L), gamma(t*L)) = |s-t|*L on a grid of parameter pairs
// for the interpolated geodesic between x and y.
GeodesicReport check_geodesic_property(const SpaceSpec& space,
                                       const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& y, int samples = 9);
GeodesicReport check_geodesic_property(const SpaceSpec& space,
                                       const Eigen::MatrixXd& x,
                                       const Eigen::MatrixXd& y, int samples = 9);

}  // namespace geokernels

#endif
