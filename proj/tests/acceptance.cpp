// Acceptance runner: one line per criterion, nonzero exit when any fails.
// Always runs every criterion; failures never stop the suite.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "geokernels/experiment.hpp"
#include "geokernels/kernels.hpp"
#include "geokernels/manifolds.hpp"
#include "geokernels/metric_props.hpp"
#include "geokernels/rng.hpp"
#include "geokernels/sampling.hpp"
#include "geokernels/spectral.hpp"
#include "row_configs.hpp"

using namespace geokernels;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& detail) {
    if (!ok) failures.push_back(detail);
  }
};

std::vector<Criterion> g_criteria;

Criterion& criterion(const std::string& name) {
  g_criteria.push_back({name, {}});
  return g_criteria.back();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

bool fails_somewhere(const LambdaSweep& sweep) { return !sweep.pd_for_all_tested(); }

std::string sweep_note(const LambdaSweep& sweep) {
  if (sweep.pd_for_all_tested()) {
    return "PD for every tested lambda (min eig " + fmt(sweep.worst_eigenvalue) + ")";
  }
  return "violation at lambda " + fmt(sweep.failing_lambdas.front()) + " (min eig " +
         fmt(sweep.worst_eigenvalue) + ")";
}

MatrixXd floyd_warshall(const WeightedGraph& g) {
  const int n = g.vertex_count();
  MatrixXd d = MatrixXd::Constant(n, n, std::numeric_limits<double>::infinity());
  d.diagonal().setZero();
  for (const auto& e : g.edges()) {
    d(e.u, e.v) = std::min(d(e.u, e.v), e.weight);
    d(e.v, e.u) = d(e.u, e.v);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
      }
    }
  }
  return d;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_spd_panel(const std::vector<double>& grid) {
  Criterion& c = criterion("1 spd panel (affine-invariant and fisher fail, "
                           "frobenius and log-euclidean pass)");
  const PointSet pts = sample_points(spd_space(3, MetricVariant::kAffineInvariant), 100, 208);
  for (MetricVariant variant : {MetricVariant::kAffineInvariant, MetricVariant::kFisher}) {
    const DistanceMatrix d = pairwise_distances(pts, variant);
    for (double q : {1.0, 2.0}) {
      const LambdaSweep sweep = lambda_sweep(d, q, grid);
      c.expect(fails_somewhere(sweep),
               to_string(variant) + " q=" + fmt(q) + ": " + sweep_note(sweep));
    }
  }
  for (MetricVariant variant : {MetricVariant::kFrobenius, MetricVariant::kLogEuclidean}) {
    const DistanceMatrix d = pairwise_distances(pts, variant);
    for (double q : {1.0, 2.0}) {
      const LambdaSweep sweep = lambda_sweep(d, q, grid);
      c.expect(sweep.pd_for_all_tested(),
               to_string(variant) + " q=" + fmt(q) + ": " + sweep_note(sweep));
    }
  }
}

void criterion_sphere_panel(const std::vector<double>& grid) {
  Criterion& c = criterion("2 sphere panel (gaussian fails, laplacian passes, CND)");
  const DistanceMatrix d = pairwise_distances(sample_points(sphere_space(64), 200, 7));
  const LambdaSweep gaussian = lambda_sweep(d, 2.0, grid);
  const LambdaSweep laplacian = lambda_sweep(d, 1.0, grid);
  c.expect(fails_somewhere(gaussian), "q=2: " + sweep_note(gaussian));
  c.expect(laplacian.pd_for_all_tested(), "q=1: " + sweep_note(laplacian));
  const auto [verdict, witness] = cnd_verdict(d.entries);
  c.expect(verdict == Verdict::kCnd, "cnd witness " + fmt(witness));
}

void criterion_grassmann_lines(const std::vector<double>& grid) {
  Criterion& c = criterion("3 grassmann lines panel (intrinsic gaussian fails, "
                           "chordal passes, intrinsic laplacian passes here)");
  const PointSet pts =
      sample_points(grassmann_space(50, 1, MetricVariant::kIntrinsic), 100, 7);
  const DistanceMatrix intrinsic = pairwise_distances(pts);
  const DistanceMatrix chordal = pairwise_distances(pts, MetricVariant::kChordal);
  const LambdaSweep int_q2 = lambda_sweep(intrinsic, 2.0, grid);
  const LambdaSweep int_q1 = lambda_sweep(intrinsic, 1.0, grid);
  c.expect(fails_somewhere(int_q2), "intrinsic q=2: " + sweep_note(int_q2));
  c.expect(int_q1.pd_for_all_tested(), "intrinsic q=1: " + sweep_note(int_q1));
  for (double q : {1.0, 2.0}) {
    const LambdaSweep sweep = lambda_sweep(chordal, q, grid);
    c.expect(sweep.pd_for_all_tested(), "chordal q=" + fmt(q) + ": " + sweep_note(sweep));
  }
}

void criterion_grassmann_frames(const std::vector<double>& grid) {
  Criterion& c = criterion("4 grassmann frames panel (intrinsic gaussian fails, "
                           "intrinsic laplacian passes here)");
  const DistanceMatrix d = pairwise_distances(
      sample_points(grassmann_space(100, 15, MetricVariant::kIntrinsic), 100, 7));
  const LambdaSweep gaussian = lambda_sweep(d, 2.0, grid);
  const LambdaSweep laplacian = lambda_sweep(d, 1.0, grid);
  c.expect(fails_somewhere(gaussian), "q=2: " + sweep_note(gaussian));
  c.expect(laplacian.pd_for_all_tested(), "q=1: " + sweep_note(laplacian));
}

void criterion_graph_panel(const std::vector<double>& grid) {
  Criterion& c = criterion("5 graph panel (both kernels fail)");
  const PointSet cloud = sample_two_cluster_cloud(124, 9);
  PointSet graph;
  graph.space = graph_space();
  graph.graph = build_neighbor_graph(cloud, NeighborRule::eps(1.3));
  const DistanceMatrix d = pairwise_distances(graph);
  for (double q : {1.0, 2.0}) {
    const LambdaSweep sweep = lambda_sweep(d, q, grid);
    c.expect(fails_somewhere(sweep), "q=" + fmt(q) + ": " + sweep_note(sweep));
  }
}

void criterion_collinear_cubic(const std::vector<double>& grid) {
  Criterion& c = criterion("6 collinear points (q=3 fails, q=2 and q=1 pass)");
  MatrixXd line(10, 10);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) line(i, j) = std::abs(i - j);
  }
  const DistanceMatrix d{line, euclidean_space(1)};
  const LambdaSweep cubic = lambda_sweep(d, 3.0, grid);
  c.expect(fails_somewhere(cubic), "q=3: " + sweep_note(cubic));
  for (double q : {1.0, 2.0}) {
    const LambdaSweep sweep = lambda_sweep(d, q, grid);
    c.expect(sweep.pd_for_all_tested(), "q=" + fmt(q) + ": " + sweep_note(sweep));
  }
}

void criterion_schonberg(const std::vector<double>& grid) {
  Criterion& c = criterion("7 schonberg consistency across spaces, seeds and sizes");
  int disagreements = 0;
  for (const rowconfig::Row& row : rowconfig::table_rows()) {
    for (int n : {50, 200}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const DistanceMatrix d = row.distances(n, seed);
        const SchonbergReport report = schonberg_crosscheck(d, grid);
        if (!report.consistent) {
          ++disagreements;
          c.expect(false, std::string(row.name) + " n=" + std::to_string(n) + " seed=" +
                              std::to_string(seed) + ": cnd=" + to_string(report.cnd) +
                              " witness=" + fmt(report.cnd_witness) + " but sweep " +
                              sweep_note(report.laplacian_sweep));
        }
      }
    }
  }
  c.expect(disagreements == 0, "total disagreements: " + std::to_string(disagreements));
}

void criterion_sqrt_metric() {
  Criterion& c = criterion("8 square-root metric passes the full triangle scan");
  struct Case {
    const char* name;
    DistanceMatrix d;
  };
  std::vector<Case> cases;
  cases.push_back({"euclidean", pairwise_distances(sample_points(euclidean_space(3), 100, 1))});
  cases.push_back({"sphere", pairwise_distances(sample_points(sphere_space(4), 100, 1))});
  cases.push_back({"hyperbolic", pairwise_distances(sample_points(hyperbolic_space(3), 100, 1))});
  cases.push_back({"tree", pairwise_distances(sample_tree(100, 1))});
  for (const Case& item : cases) {
    const DistanceMatrix sqrt_d = sqrt_distance_matrix(item.d);
    const AxiomReport report = check_metric_axioms(sqrt_d.entries, 1e-9);
    c.expect(report.is_metric() && report.violations_triangle == 0,
             std::string(item.name) + ": " + std::to_string(report.violations_triangle) +
                 " triangle violations, worst slack " + fmt(report.worst_triangle_slack));
  }
}

void criterion_cat_checks() {
  Criterion& c = criterion("9 comparison-triangle checks (flat, octant, hyperbolic)");
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    VectorXd p(3), q(3), r(3);
    for (int i = 0; i < 3; ++i) {
      p(i) = rng.normal();
      q(i) = rng.normal();
      r(i) = rng.normal();
    }
    const CatReport report = cat_check(euclidean_space(3), p, q, r, 0.0);
    c.expect(std::abs(report.worst_slack) < 1e-8,
             "euclidean triangle slack " + fmt(report.worst_slack));
  }
  VectorXd e1 = VectorXd::Zero(3), e2 = VectorXd::Zero(3), e3 = VectorXd::Zero(3);
  e1(0) = e2(1) = e3(2) = 1.0;
  const CatReport octant = cat_check(sphere_space(3), e1, e2, e3, 0.0);
  c.expect(!octant.satisfied && octant.worst_slack < -0.1,
           "octant worst slack " + fmt(octant.worst_slack));
  const PointSet hyp = sample_points(hyperbolic_space(2), 3, 5);
  const CatReport hyper =
      cat_check(hyperbolic_space(2), hyp.vectors[0], hyp.vectors[1], hyp.vectors[2], 0.0);
  c.expect(hyper.satisfied, "hyperbolic triangle worst slack " + fmt(hyper.worst_slack));
}

void criterion_oracles() {
  Criterion& c = criterion("10 oracle equivalences (fisher scaling, shortest paths, "
                           "lines vs projective)");
  Rng rng(13);
  double worst_fisher = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    MatrixXd g1(3, 3), g2(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        g1(i, j) = rng.normal();
        g2(i, j) = rng.normal();
      }
    }
    const MatrixXd a = g1.transpose() * g1 + 1e-3 * MatrixXd::Identity(3, 3);
    const MatrixXd b = g2.transpose() * g2 + 1e-3 * MatrixXd::Identity(3, 3);
    const double ai = spd_distance(a, b, MetricVariant::kAffineInvariant);
    const double fisher = spd_distance(a, b, MetricVariant::kFisher);
    worst_fisher = std::max(worst_fisher, std::abs(fisher - ai / std::numbers::sqrt2));
  }
  c.expect(worst_fisher < 1e-10, "fisher deviation " + fmt(worst_fisher));

  const PointSet cloud = sample_points(euclidean_space(2), 30, 17);
  const WeightedGraph g = build_neighbor_graph(cloud, NeighborRule::eps(1.6));
  const DistanceMatrix fast = graph_shortest_paths(g);
  const double gap = (fast.entries - floyd_warshall(g)).cwiseAbs().maxCoeff();
  c.expect(gap < 1e-12, "shortest-path deviation " + fmt(gap));

  double worst_line = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    VectorXd x(5), y(5);
    for (int i = 0; i < 5; ++i) {
      x(i) = rng.normal();
      y(i) = rng.normal();
    }
    x.normalize();
    y.normalize();
    worst_line = std::max(
        worst_line, std::abs(grassmann_distance(x, y, MetricVariant::kIntrinsic) -
                             projective_distance(x, y)));
  }
  c.expect(worst_line < 1e-10, "line-vs-projective deviation " + fmt(worst_line));
}

void criterion_determinism() {
  Criterion& c = criterion("11 repeated panel runs produce byte-identical files");
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "geokernels_acceptance_repro";
  const fs::path dirs[2] = {base / "a", base / "b"};
  fs::remove_all(base);
  for (const fs::path& dir : dirs) {
    for (const ExperimentConfig& panel : standard_panels(7)) {
      ExperimentConfig config = panel;
      config.output_dir = dir.string();
      run_experiment(config);
    }
  }
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(dirs[0])) {
    const fs::path twin = dirs[1] / entry.path().filename();
    c.expect(fs::exists(twin), "missing twin for " + entry.path().filename().string());
    if (fs::exists(twin)) {
      ++compared;
      c.expect(slurp(entry.path()) == slurp(twin),
               entry.path().filename().string() + " differs between runs");
    }
  }
  c.expect(compared == 10, "expected 10 result files, compared " +
                               std::to_string(compared));
  fs::remove_all(base);
}

}  // namespace

int main() {
  const std::vector<double> grid = default_lambda_grid();

  criterion_spd_panel(grid);
  criterion_sphere_panel(grid);
  criterion_grassmann_lines(grid);
  criterion_grassmann_frames(grid);
  criterion_graph_panel(grid);
  criterion_collinear_cubic(grid);
  criterion_schonberg(grid);
  criterion_sqrt_metric();
  criterion_cat_checks();
  criterion_oracles();
  criterion_determinism();

  int failed = 0;
  for (const Criterion& c : g_criteria) {
    if (c.failures.empty()) {
      std::printf("[PASS] criterion %s\n", c.name.c_str());
    } else {
      ++failed;
      std::printf("[FAIL] criterion %s\n", c.name.c_str());
      for (const std::string& detail : c.failures) {
        std::printf("       %s\n", detail.c_str());
      }
    }
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(g_criteria.size()) - failed,
              g_criteria.size());
  return failed == 0 ? 0 : 1;
}
