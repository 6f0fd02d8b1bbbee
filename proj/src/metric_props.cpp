#include "geokernels/metric_props.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geokernels/errors.hpp"
#include "geokernels/manifolds.hpp"

namespace geokernels {

namespace {

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

}  // namespace

AxiomReport check_metric_axioms(const Eigen::MatrixXd& d, double tol) {
  if (d.rows() != d.cols()) {
    throw ValidationError("metric axiom scan needs a square matrix");
  }
  const auto n = d.rows();
  AxiomReport report;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(d(i, i)) > tol) ++report.violations_diagonal;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(d(i, j) - d(j, i)) > tol) ++report.violations_symmetry;
      if (d(i, j) < -tol) ++report.violations_nonnegative;
      if (i != j && std::abs(d(i, j)) <= tol) ++report.violations_identity;
    }
  }
  report.violations_symmetry /= 2;  // each pair counted twice
  report.violations_identity /= 2;

  report.worst_triangle_slack = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double slack = d(i, k) + d(k, j) - d(i, j);
        if (slack < report.worst_triangle_slack) {
          report.worst_triangle_slack = slack;
        }
        if (slack < -tol) {
          ++report.violations_triangle;
          if (report.worst_triples.size() < 8) {
            report.worst_triples.push_back({static_cast<int>(i), static_cast<int>(k),
                                            static_cast<int>(j), slack});
            std::sort(report.worst_triples.begin(), report.worst_triples.end(),
                      [](const auto& a, const auto& b) { return a.slack < b.slack; });
          } else if (slack < report.worst_triples.back().slack) {
            report.worst_triples.back() = {static_cast<int>(i), static_cast<int>(k),
                                           static_cast<int>(j), slack};
            std::sort(report.worst_triples.begin(), report.worst_triples.end(),
                      [](const auto& a, const auto& b) { return a.slack < b.slack; });
          }
        }
      }
    }
  }
  if (n == 0) report.worst_triangle_slack = 0.0;
  return report;
}

double ComparisonTriangle::model_distance(const Eigen::Vector3d& u,
                                          const Eigen::Vector3d& v) const {
  if (kappa == 0.0) {
    return (u - v).norm();
  }
  if (kappa > 0.0) {
    const double r2 = 1.0 / kappa;
    return (1.0 / std::sqrt(kappa)) * std::acos(clamp(u.dot(v) / r2, -1.0, 1.0));
  }
  const double s2 = -1.0 / kappa;
  const double m = -u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
  return std::sqrt(s2) * std::acosh(std::max(1.0, -m / s2));
}

Eigen::Vector3d ComparisonTriangle::model_interpolate(const Eigen::Vector3d& u,
                                                      const Eigen::Vector3d& v,
                                                      double t) const {
  if (kappa == 0.0) {
    return (1.0 - t) * u + t * v;
  }
  if (kappa > 0.0) {
    const double scale = 1.0 / std::sqrt(kappa);
    const Eigen::Vector3d un = u / scale;
    const Eigen::Vector3d vn = v / scale;
    const double angle = std::acos(clamp(un.dot(vn), -1.0, 1.0));
    if (angle < 1e-15) return u;
    const double s = std::sin(angle);
    Eigen::Vector3d p =
        (std::sin((1.0 - t) * angle) / s) * un + (std::sin(t * angle) / s) * vn;
    return scale * p.normalized();
  }
  const double scale = std::sqrt(-1.0 / kappa);
  const Eigen::Vector3d un = u / scale;
  const Eigen::Vector3d vn = v / scale;
  const double m = -un(0) * vn(0) + un(1) * vn(1) + un(2) * vn(2);
  const double len = std::acosh(std::max(1.0, -m));
  if (len < 1e-15) return u;
  const double s = std::sinh(len);
  const Eigen::Vector3d p =
      (std::sinh((1.0 - t) * len) / s) * un + (std::sinh(t * len) / s) * vn;
  return scale * p;
}

ComparisonTriangle comparison_triangle(double a, double b, double c, double kappa) {
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw DomainError("side lengths must be nonnegative");
  }
  const double scale = std::max({a, b, c, 1.0});
  const double slack = 1e-12 * scale;
  if (a > b + c + slack || b > a + c + slack || c > a + b + slack) {
    throw DomainError("side lengths violate the triangle inequality");
  }
  ComparisonTriangle tri;
  tri.a = a;
  tri.b = b;
  tri.c = c;
  tri.kappa = kappa;

  if (kappa == 0.0) {
    // angle at A between AB and AC
    double cos_alpha = 1.0;
    if (a > 0.0 && b > 0.0) {
      cos_alpha = clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
    }
    const double sin_alpha = std::sqrt(std::max(0.0, 1.0 - cos_alpha * cos_alpha));
    tri.vertex_a = Eigen::Vector3d::Zero();
    tri.vertex_b = Eigen::Vector3d(a, 0.0, 0.0);
    tri.vertex_c = Eigen::Vector3d(b * cos_alpha, b * sin_alpha, 0.0);
    return tri;
  }

  if (kappa > 0.0) {
    const double model_diameter = std::numbers::pi / std::sqrt(kappa);
    if (a + b + c >= 2.0 * model_diameter) {
      throw DomainError("triangle perimeter must stay below twice the model diameter");
    }
    const double r = 1.0 / std::sqrt(kappa);
    const double ah = a / r, bh = b / r, ch = c / r;
    double cos_alpha = 1.0;
    if (std::sin(ah) * std::sin(bh) > 0.0) {
      cos_alpha = clamp((std::cos(ch) - std::cos(ah) * std::cos(bh)) /
                            (std::sin(ah) * std::sin(bh)),
                        -1.0, 1.0);
    }
    const double sin_alpha = std::sqrt(std::max(0.0, 1.0 - cos_alpha * cos_alpha));
    tri.vertex_a = r * Eigen::Vector3d(1.0, 0.0, 0.0);
    tri.vertex_b = r * Eigen::Vector3d(std::cos(ah), std::sin(ah), 0.0);
    tri.vertex_c =
        r * Eigen::Vector3d(std::cos(bh), std::sin(bh) * cos_alpha, std::sin(bh) * sin_alpha);
    return tri;
  }

  const double s = std::sqrt(-1.0 / kappa);
  const double ah = a / s, bh = b / s, ch = c / s;
  double cos_alpha = 1.0;
  if (std::sinh(ah) * std::sinh(bh) > 0.0) {
    cos_alpha = clamp((std::cosh(ah) * std::cosh(bh) - std::cosh(ch)) /
                          (std::sinh(ah) * std::sinh(bh)),
                      -1.0, 1.0);
  }
  const double sin_alpha = std::sqrt(std::max(0.0, 1.0 - cos_alpha * cos_alpha));
  tri.vertex_a = s * Eigen::Vector3d(1.0, 0.0, 0.0);
  tri.vertex_b = s * Eigen::Vector3d(std::cosh(ah), std::sinh(ah), 0.0);
  tri.vertex_c = s * Eigen::Vector3d(std::cosh(bh), std::sinh(bh) * cos_alpha,
                                     std::sinh(bh) * sin_alpha);
  return tri;
}

namespace {

template <typename Point>
CatReport cat_check_impl(const SpaceSpec& space, const Point& p, const Point& q,
                         const Point& r, double kappa, int samples_per_edge) {
  if (samples_per_edge < 1) {
    throw ValidationError("samples_per_edge must be >= 1");
  }
  const double dpq = space_distance(space, p, q);
  const double dpr = space_distance(space, p, r);
  const double dqr = space_distance(space, q, r);
  const ComparisonTriangle tri = comparison_triangle(dpq, dpr, dqr, kappa);
  // model vertices matching p, q, r
  const Eigen::Vector3d mp = tri.vertex_a;
  const Eigen::Vector3d mq = tri.vertex_b;
  const Eigen::Vector3d mr = tri.vertex_c;

  struct EdgeDef {
    const Point *u, *v, *opposite;
    const Eigen::Vector3d *mu, *mv, *mopposite;
  };
  const EdgeDef edges[3] = {
      {&p, &q, &r, &mp, &mq, &mr},
      {&q, &r, &p, &mq, &mr, &mp},
      {&p, &r, &q, &mp, &mr, &mq},
  };

  CatReport report;
  report.kappa = kappa;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (int e = 0; e < 3; ++e) {
    for (int i = 1; i <= samples_per_edge; ++i) {
      const double t = static_cast<double>(i) / (samples_per_edge + 1);
      const Point x = geodesic_interpolate(space, *edges[e].u, *edges[e].v, t);
      const Eigen::Vector3d xbar =
          tri.model_interpolate(*edges[e].mu, *edges[e].mv, t);
      const double slack = tri.model_distance(xbar, *edges[e].mopposite) -
                           space_distance(space, x, *edges[e].opposite);
      report.samples.push_back({e, t, slack});
      report.worst_slack = std::min(report.worst_slack, slack);
    }
  }
  report.satisfied = report.worst_slack >= -1e-9;
  return report;
}

template <typename Point>
GeodesicReport geodesic_property_impl(const SpaceSpec& space, const Point& x,
                                      const Point& y, int samples) {
  if (samples < 2) {
    throw ValidationError("geodesic property check needs at least 2 samples");
  }
  GeodesicReport report;
  report.length = space_distance(space, x, y);
  std::vector<Point> points;
  points.reserve(samples);
  std::vector<double> fractions(samples);
  for (int i = 0; i < samples; ++i) {
    fractions[i] = static_cast<double>(i) / (samples - 1);
    points.push_back(geodesic_interpolate(space, x, y, fractions[i]));
  }
  for (int i = 0; i < samples; ++i) {
    for (int j = i; j < samples; ++j) {
      const double measured = space_distance(space, points[i], points[j]);
      const double expected = std::abs(fractions[i] - fractions[j]) * report.length;
      report.max_deviation = std::max(report.max_deviation, std::abs(measured - expected));
    }
  }
  report.holds = report.max_deviation < 1e-8 * std::max(report.length, 1e-300);
  return report;
}

}  // namespace

CatReport cat_check(const SpaceSpec& space, const Eigen::VectorXd& p,
                    const Eigen::VectorXd& q, const Eigen::VectorXd& r, double kappa,
                    int samples_per_edge) {
  return cat_check_impl(space, p, q, r, kappa, samples_per_edge);
}

CatReport cat_check(const SpaceSpec& space, const Eigen::MatrixXd& p,
                    const Eigen::MatrixXd& q, const Eigen::MatrixXd& r, double kappa,
                    int samples_per_edge) {
  return cat_check_impl(space, p, q, r, kappa, samples_per_edge);
}

GeodesicReport check_geodesic_property(const SpaceSpec& space, const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& y, int samples) {
  return geodesic_property_impl(space, x, y, samples);
}

GeodesicReport check_geodesic_property(const SpaceSpec& space, const Eigen::MatrixXd& x,
                                       const Eigen::MatrixXd& y, int samples) {
  return geodesic_property_impl(space, x, y, samples);
}

}  // namespace geokernels
