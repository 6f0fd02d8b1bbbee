// Command line front end: eigenspectrum reports, bandwidth sweeps, CND
// verdicts, metric-axiom scans, comparison-triangle checks and the standard
// eigenspectrum panels.
//
// Exit codes: 0 success, 1 usage error, 2 input validation error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "geokernels/errors.hpp"
#include "geokernels/experiment.hpp"
#include "geokernels/kernels.hpp"
#include "geokernels/manifolds.hpp"
#include "geokernels/metric_props.hpp"
#include "geokernels/sampling.hpp"
#include "geokernels/spectral.hpp"

namespace gk = geokernels;

namespace {

struct SpaceOptions {
  std::string kind = "sphere";
  std::string variant;
  int dim = 3;
  int subspace = 1;
  double q_norm = 3.0;
  double epsilon = 0.9;
  int knn = 0;
};

struct CommonOptions {
  SpaceOptions space;
  int n = 100;
  std::uint64_t seed = 1;
  double q = 2.0;
  std::string lambda_grid = "1e-2:1e3:20";
  std::string out;
  std::string format = "structured";
  std::string matrix_file;
};

void add_space_flags(CLI::App* cmd, SpaceOptions& opts) {
  cmd->add_option("--space", opts.kind,
                  "euclidean|lq|sphere|projective|hyperbolic|spd|grassmann|graph|tree|string")
      ->capture_default_str();
  cmd->add_option("--variant", opts.variant,
                  "spd: frobenius|log_euclidean|affine_invariant|fisher; "
                  "grassmann: intrinsic|chordal");
  cmd->add_option("--dim", opts.dim, "ambient/matrix dimension")->capture_default_str();
  cmd->add_option("--k", opts.subspace, "grassmann subspace dimension")
      ->capture_default_str();
  cmd->add_option("--q-norm", opts.q_norm, "lq exponent (> 2)")->capture_default_str();
  cmd->add_option("--epsilon", opts.epsilon, "neighbor radius for graph samples")
      ->capture_default_str();
  cmd->add_option("--knn", opts.knn, "use k nearest neighbors instead of epsilon");
}

gk::SpaceSpec make_space(const SpaceOptions& opts) {
  const gk::SpaceKind kind = gk::parse_space_kind(opts.kind);
  switch (kind) {
    case gk::SpaceKind::kEuclidean: return gk::euclidean_space(opts.dim);
    case gk::SpaceKind::kLq: return gk::lq_space(opts.dim, opts.q_norm);
    case gk::SpaceKind::kSphere: return gk::sphere_space(opts.dim);
    case gk::SpaceKind::kProjective: return gk::projective_space(opts.dim);
    case gk::SpaceKind::kHyperbolic: return gk::hyperbolic_space(opts.dim);
    case gk::SpaceKind::kSpd:
      return gk::spd_space(opts.dim, opts.variant.empty()
                                         ? gk::MetricVariant::kAffineInvariant
                                         : gk::parse_metric_variant(opts.variant));
    case gk::SpaceKind::kGrassmann:
      return gk::grassmann_space(opts.dim, opts.subspace,
                                 opts.variant.empty()
                                     ? gk::MetricVariant::kIntrinsic
                                     : gk::parse_metric_variant(opts.variant));
    case gk::SpaceKind::kGraph: return gk::graph_space();
    case gk::SpaceKind::kTree: return gk::tree_space();
    case gk::SpaceKind::kString: return gk::string_space();
  }
  throw gk::ValidationError("unknown space kind");
}

std::vector<double> parse_grid(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3) {
    throw gk::ValidationError("lambda grid must be min:max:count, got " + text);
  }
  return gk::log_lambda_grid(lo, hi, count);
}

gk::ExperimentConfig make_config(const CommonOptions& opts, const std::string& name) {
  gk::ExperimentConfig config;
  config.name = name;
  config.space = make_space(opts.space);
  config.sample_size = opts.n;
  config.seed = opts.seed;
  config.q_values = {opts.q};
  config.lambda_grid = parse_grid(opts.lambda_grid);
  if (opts.space.knn > 0) {
    config.graph_rule = gk::NeighborRule::knn(opts.space.knn);
  } else {
    config.graph_rule = gk::NeighborRule::eps(opts.space.epsilon);
  }
  return config;
}

// Distance matrix from either --matrix FILE or a sampled space.
gk::DistanceMatrix resolve_distances(const CommonOptions& opts) {
  if (!opts.matrix_file.empty()) {
    return gk::read_distance_matrix(opts.matrix_file);
  }
  const gk::ExperimentConfig config = make_config(opts, "cli");
  return gk::pairwise_distances(gk::build_sample(config));
}

void write_output(const gk::ExperimentResult& result, const CommonOptions& opts) {
  if (opts.out.empty()) return;
  if (opts.format == "csv") {
    gk::write_file(opts.out, gk::to_csv(result));
  } else if (opts.format == "structured") {
    gk::write_file(opts.out, gk::to_structured(result));
  } else {
    throw gk::ValidationError("unknown format: " + opts.format);
  }
  std::cout << "wrote " << opts.out << "\n";
}

void print_sweep(const gk::LambdaSweep& sweep) {
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    std::printf("lambda=%-12.6g min_eig=%.6g\n", sweep.grid[i],
                sweep.min_eigenvalues[i]);
  }
  if (sweep.pd_for_all_tested()) {
    std::printf("PD (no violation found at any tested lambda)\n");
  } else {
    std::printf("NOT PD (witness lambda=%.6g, min eig=%.6g)\n",
                sweep.failing_lambdas.front(), sweep.worst_eigenvalue);
  }
}

int run_spectrum(const CommonOptions& opts, double lambda) {
  gk::ExperimentConfig config = make_config(opts, "spectrum");
  config.lambda_grid = {lambda};
  const gk::ExperimentResult result = gk::run_experiment(config);
  const gk::SpectrumReport& report = result.reports.front();
  std::printf("space=%s n=%d q=%g lambda=%g\n", report.space.label().c_str(),
              report.sample_size, opts.q, lambda);
  std::printf("min eigenvalue %.6g (tolerance %.3g)\n", report.min_eigenvalue,
              report.tolerance);
  std::printf("%s\n", report.verdict == gk::Verdict::kPd
                          ? "PD (no violation found)"
                          : "NOT PD (negative eigenvalue beyond tolerance)");
  write_output(result, opts);
  return 0;
}

int run_sweep(const CommonOptions& opts) {
  gk::ExperimentConfig config = make_config(opts, "sweep");
  const gk::DistanceMatrix d = gk::pairwise_distances(gk::build_sample(config));
  const gk::LambdaSweep sweep = gk::lambda_sweep(d, opts.q, config.lambda_grid);
  std::printf("space=%s n=%d q=%g\n", d.space.label().c_str(), d.size(), opts.q);
  print_sweep(sweep);
  if (!opts.out.empty()) {
    const gk::ExperimentResult result = gk::run_experiment(config);
    write_output(result, opts);
  }
  return 0;
}

int run_cnd(const CommonOptions& opts) {
  const gk::DistanceMatrix d = resolve_distances(opts);
  const auto [verdict, witness] = gk::cnd_verdict(d.entries);
  if (verdict == gk::Verdict::kCnd) {
    std::printf("CND (no violation found at n = %d)\n", d.size());
  } else {
    std::printf("NOT CND (witness eigenvalue = %.6g)\n", witness);
  }
  return 0;
}

int run_metric_check(const CommonOptions& opts, bool take_sqrt) {
  gk::DistanceMatrix d = resolve_distances(opts);
  if (take_sqrt) {
    d = gk::sqrt_distance_matrix(d);
  }
  const gk::AxiomReport report = gk::check_metric_axioms(d.entries);
  std::printf("n=%d symmetry=%d diagonal=%d nonnegative=%d identity=%d triangle=%d\n",
              d.size(), report.violations_symmetry, report.violations_diagonal,
              report.violations_nonnegative, report.violations_identity,
              report.violations_triangle);
  std::printf("worst triangle slack %.6g\n", report.worst_triangle_slack);
  std::printf("%s\n", report.is_metric() ? "metric axioms hold on this sample"
                                         : "metric axioms VIOLATED");
  return 0;
}

int run_cat_check(const CommonOptions& opts, double kappa, int edge_samples) {
  const gk::SpaceSpec space = make_space(opts.space);
  gk::CatReport report;
  if (space.kind == gk::SpaceKind::kSpd) {
    const gk::PointSet pts = gk::sample_points(space, 3, opts.seed);
    report = gk::cat_check(space, pts.matrices[0], pts.matrices[1], pts.matrices[2],
                           kappa, edge_samples);
  } else {
    const gk::PointSet pts = gk::sample_points(space, 3, opts.seed);
    report = gk::cat_check(space, pts.vectors[0], pts.vectors[1], pts.vectors[2], kappa,
                           edge_samples);
  }
  std::printf("space=%s kappa=%g samples=%zu\n", space.label().c_str(), kappa,
              report.samples.size());
  std::printf("worst slack %.6g\n", report.worst_slack);
  std::printf("%s\n", report.satisfied ? "SATISFIED" : "VIOLATED");
  if (!report.satisfied) {
    for (const gk::CatSample& s : report.samples) {
      if (s.slack < -1e-9) {
        std::printf("  edge %d t=%.3f slack=%.6g\n", s.edge, s.t, s.slack);
      }
    }
  }
  return 0;
}

int run_reproduce(std::int64_t seed_override, const std::string& out_dir) {
  for (const gk::ExperimentConfig& panel : gk::standard_panels(seed_override)) {
    gk::ExperimentConfig config = panel;
    config.output_dir = out_dir;
    const gk::ExperimentResult result = gk::run_experiment(config);
    // summarize each (variant, q) cell
    std::printf("panel %-17s n=%d seed=%llu\n", config.name.c_str(), config.sample_size,
                static_cast<unsigned long long>(config.seed));
    const std::size_t per_cell = config.lambda_grid.empty()
                                     ? gk::default_lambda_grid().size()
                                     : config.lambda_grid.size();
    for (std::size_t cell = 0; cell * per_cell < result.reports.size(); ++cell) {
      double worst = std::numeric_limits<double>::infinity();
      bool pd = true;
      double witness_lambda = 0.0;
      for (std::size_t i = cell * per_cell; i < (cell + 1) * per_cell; ++i) {
        const gk::SpectrumReport& r = result.reports[i];
        if (r.min_eigenvalue < worst) worst = r.min_eigenvalue;
        if (r.verdict == gk::Verdict::kNotPd) {
          if (pd) witness_lambda = r.kernel->lambda;
          pd = false;
        }
      }
      const gk::SpectrumReport& first = result.reports[cell * per_cell];
      if (pd) {
        std::printf("  %-28s q=%g: PD (no violation found)\n",
                    first.space.label().c_str(), first.kernel->q);
      } else {
        std::printf("  %-28s q=%g: NOT PD (witness lambda=%.4g, min eig=%.4g)\n",
                    first.space.label().c_str(), first.kernel->q, witness_lambda, worst);
      }
    }
  }
  std::printf("wrote result files under %s\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic exponential kernel toolkit"};
  app.require_subcommand(1);

  CommonOptions opts;
  double lambda = 1.0;
  double kappa = 0.0;
  int edge_samples = 9;
  bool take_sqrt = false;
  std::int64_t seed_override = -1;
  std::string out_dir = "results";

  auto add_common = [&](CLI::App* cmd, bool with_matrix) {
    add_space_flags(cmd, opts.space);
    cmd->add_option("--n", opts.n, "sample size")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "sampler seed")->capture_default_str();
    cmd->add_option("--q", opts.q, "kernel exponent")->capture_default_str();
    cmd->add_option("--lambda-grid", opts.lambda_grid, "min:max:count (log spaced)")
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "output file path");
    cmd->add_option("--format", opts.format, "csv|structured")->capture_default_str();
    if (with_matrix) {
      cmd->add_option("--matrix", opts.matrix_file,
                      "read a whitespace-separated square distance matrix instead of "
                      "sampling");
    }
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenspectrum of one Gram matrix");
  add_common(spectrum, false);
  spectrum->add_option("--lambda", lambda, "kernel bandwidth")->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "minimum eigenvalue across bandwidths");
  add_common(sweep, false);

  CLI::App* cnd = app.add_subcommand("cnd", "conditional negative definiteness verdict");
  add_common(cnd, true);

  CLI::App* metric = app.add_subcommand("metric-check", "metric axiom scan");
  add_common(metric, true);
  metric->add_flag("--sqrt", take_sqrt, "scan the square-root metric instead");

  CLI::App* cat = app.add_subcommand("cat-check",
                                     "comparison-triangle curvature check on a sampled "
                                     "triangle");
  add_common(cat, false);
  cat->add_option("--kappa", kappa, "model space curvature")->capture_default_str();
  cat->add_option("--edge-samples", edge_samples, "samples per edge")
      ->capture_default_str();

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "run the five standard eigenspectrum panels");
  reproduce->add_option("--seed", seed_override, "override every panel seed");
  reproduce->add_option("--out", out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(opts, lambda);
    if (sweep->parsed()) return run_sweep(opts);
    if (cnd->parsed()) return run_cnd(opts);
    if (metric->parsed()) return run_metric_check(opts, take_sqrt);
    if (cat->parsed()) return run_cat_check(opts, kappa, edge_samples);
    if (reproduce->parsed()) return run_reproduce(seed_override, out_dir);
  } catch (const gk::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const gk::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const gk::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const gk::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
