#ifndef GEOKERNELS_EXPERIMENT_HPP
#define GEOKERNELS_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geokernels/sampling.hpp"
#include "geokernels/spectral.hpp"

namespace geokernels {

inline constexpr const char* kLibraryVersion = "geokernels 0.1.0";

// One eigenspectrum experiment: sample a space, build the distance matrix
// for each metric variant, sweep the kernel bandwidth for each exponent.
struct ExperimentConfig {
  std::string name;  // used in output file names
  SpaceSpec space;
  std::vector<MetricVariant> variants;  // empty = just space.variant
  int sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<double> q_values{1.0, 2.0};
  std::vector<double> lambda_grid;  // empty = default grid
  std::string output_dir;           // empty = do not write files
  NeighborRule graph_rule = NeighborRule::eps(0.0);  // kind = graph only
  MixtureParams cloud;                               // kind = graph only

  void validate() const;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string library_version;
  // One report per (variant, q, lambda), grouped variant-major.
  std::vector<SpectrumReport> reports;
};

// The sample a config describes: direct sampler for the manifold kinds,
// dedicated builders for graph / tree / string kinds.
PointSet build_sample(const ExperimentConfig& config);

ExperimentResult run_experiment(const ExperimentConfig& config);

// Plot data: "space,variant,q,lambda,eig_index,eigenvalue" rows, UTF-8,
// LF-terminated. Doubles are shortest round-trip formatted, so identical
// results serialize identically.
std::string to_csv(const ExperimentResult& result);

// Structured mirror of ExperimentResult (JSON).
std::string to_structured(const ExperimentResult& result);
ExperimentResult from_structured(const std::string& text);

void write_file(const std::string& path, const std::string& content);

// Writes <stem>.json and <stem>.csv under output_dir; returns the two paths.
std::vector<std::string> write_result_files(const ExperimentResult& result,
                                            const std::string& output_dir);

// Plain-text square matrix, whitespace-separated rows; validated on load.
DistanceMatrix read_distance_matrix(const std::string& path);

// The five standard eigenspectrum panels at desk scale, in order:
// spd, sphere, grassmann lines, grassmann frames, neighbor graph.
// `seed_override` < 0 keeps each panel's pinned seed.
std::vector<ExperimentConfig> standard_panels(std::int64_t seed_override = -1);

}  // namespace geokernels

#endif
