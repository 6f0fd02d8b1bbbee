#include "geokernels/experiment.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geokernels/errors.hpp"
#include "geokernels/manifolds.hpp"

namespace geokernels {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json space_to_json(const SpaceSpec& space) {
  Json j;
  j["kind"] = to_string(space.kind);
  j["dim"] = space.dim;
  j["variant"] = to_string(space.variant);
  j["q_norm"] = space.q_norm;
  j["subspace_dim"] = space.subspace_dim;
  return j;
}

SpaceSpec space_from_json(const Json& j) {
  SpaceSpec space;
  space.kind = parse_space_kind(j.at("kind").get<std::string>());
  space.dim = j.at("dim").get<int>();
  space.variant = parse_metric_variant(j.at("variant").get<std::string>());
  space.q_norm = j.at("q_norm").get<double>();
  space.subspace_dim = j.at("subspace_dim").get<int>();
  return space;
}

std::vector<MetricVariant> effective_variants(const ExperimentConfig& config) {
  if (!config.variants.empty()) return config.variants;
  return {config.space.variant};
}

}  // namespace

void ExperimentConfig::validate() const {
  space.validate();
  if (sample_size < 2) {
    throw ValidationError("experiment sample_size must be >= 2");
  }
  if (q_values.empty()) {
    throw ValidationError("experiment needs at least one kernel exponent");
  }
  for (double q : q_values) {
    if (!(q > 0.0)) throw ValidationError("kernel exponents must be positive");
  }
  for (double lambda : lambda_grid) {
    if (!(lambda > 0.0)) throw ValidationError("lambda grid must be positive");
  }
  if (space.kind == SpaceKind::kGraph) {
    if (graph_rule.kind == NeighborRule::Kind::kEpsilon && !(graph_rule.epsilon > 0.0)) {
      throw ValidationError("graph experiments need epsilon > 0");
    }
    if (graph_rule.kind == NeighborRule::Kind::kNearest && graph_rule.k < 1) {
      throw ValidationError("graph experiments need k >= 1");
    }
  }
}

PointSet build_sample(const ExperimentConfig& config) {
  config.validate();
  switch (config.space.kind) {
    case SpaceKind::kGraph: {
      PointSet cloud =
          sample_two_cluster_cloud(config.sample_size, config.seed, config.cloud);
      PointSet points;
      points.space = graph_space();
      points.graph = build_neighbor_graph(cloud, config.graph_rule);
      return points;
    }
    case SpaceKind::kTree:
      return sample_tree(config.sample_size, config.seed);
    case SpaceKind::kString:
      return sample_strings(config.sample_size, config.seed);
    default:
      return sample_points(config.space, config.sample_size, config.seed);
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.config = config;
  result.library_version = kLibraryVersion;

  const PointSet points = build_sample(config);

  const std::vector<double> grid =
      config.lambda_grid.empty() ? default_lambda_grid() : config.lambda_grid;
  for (MetricVariant variant : effective_variants(config)) {
    const DistanceMatrix d = pairwise_distances(
        points, variant == config.space.variant ? std::optional<MetricVariant>{}
                                                : std::optional<MetricVariant>{variant});
    for (double q : config.q_values) {
      for (double lambda : grid) {
        result.reports.push_back(spectrum_report(gram_matrix(d, KernelSpec{lambda, q})));
      }
    }
  }

  if (!config.output_dir.empty()) {
    write_result_files(result, config.output_dir);
  }
  return result;
}

std::string to_csv(const ExperimentResult& result) {
  std::string out = "space,variant,q,lambda,eig_index,eigenvalue\n";
  for (const SpectrumReport& report : result.reports) {
    const std::string prefix = to_string(report.space.kind) + "," +
                               to_string(report.space.variant) + "," +
                               format_double(report.kernel ? report.kernel->q : 0.0) +
                               "," +
                               format_double(report.kernel ? report.kernel->lambda : 0.0);
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
      out += prefix;
      out += ',';
      out += std::to_string(i);
      out += ',';
      out += format_double(report.eigenvalues[i]);
      out += '\n';
    }
  }
  return out;
}

std::string to_structured(const ExperimentResult& result) {
  Json j;
  j["library_version"] = result.library_version;
  Json config;
  config["name"] = result.config.name;
  config["space"] = space_to_json(result.config.space);
  Json variants = Json::array();
  for (MetricVariant v : result.config.variants) variants.push_back(to_string(v));
  config["variants"] = variants;
  config["sample_size"] = result.config.sample_size;
  config["seed"] = result.config.seed;
  config["q_values"] = result.config.q_values;
  config["lambda_grid"] = result.config.lambda_grid;
  config["graph_rule"] = {
      {"kind", result.config.graph_rule.kind == NeighborRule::Kind::kEpsilon
                   ? "epsilon"
                   : "knn"},
      {"epsilon", result.config.graph_rule.epsilon},
      {"k", result.config.graph_rule.k},
  };
  config["cloud"] = {
      {"sigma", {result.config.cloud.sigma(0), result.config.cloud.sigma(1)}},
      {"offset", {result.config.cloud.offset(0), result.config.cloud.offset(1)}},
  };
  j["config"] = std::move(config);

  Json reports = Json::array();
  for (const SpectrumReport& report : result.reports) {
    Json r;
    r["space"] = space_to_json(report.space);
    if (report.kernel) {
      r["lambda"] = report.kernel->lambda;
      r["q"] = report.kernel->q;
    }
    r["sample_size"] = report.sample_size;
    r["tolerance"] = report.tolerance;
    r["min_eigenvalue"] = report.min_eigenvalue;
    r["verdict"] = to_string(report.verdict);
    r["eigenvalues"] = report.eigenvalues;
    reports.push_back(std::move(r));
  }
  j["reports"] = std::move(reports);
  return j.dump(2) + "\n";
}

ExperimentResult from_structured(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("result document is not valid JSON: ") + e.what());
  }
  ExperimentResult result;
  result.library_version = j.at("library_version").get<std::string>();
  const Json& config = j.at("config");
  result.config.name = config.at("name").get<std::string>();
  result.config.space = space_from_json(config.at("space"));
  for (const Json& v : config.at("variants")) {
    result.config.variants.push_back(parse_metric_variant(v.get<std::string>()));
  }
  result.config.sample_size = config.at("sample_size").get<int>();
  result.config.seed = config.at("seed").get<std::uint64_t>();
  result.config.q_values = config.at("q_values").get<std::vector<double>>();
  result.config.lambda_grid = config.at("lambda_grid").get<std::vector<double>>();
  const Json& rule = config.at("graph_rule");
  result.config.graph_rule.kind = rule.at("kind").get<std::string>() == "epsilon"
                                      ? NeighborRule::Kind::kEpsilon
                                      : NeighborRule::Kind::kNearest;
  result.config.graph_rule.epsilon = rule.at("epsilon").get<double>();
  result.config.graph_rule.k = rule.at("k").get<int>();
  const Json& cloud = config.at("cloud");
  result.config.cloud.sigma =
      Eigen::Vector2d(cloud.at("sigma")[0].get<double>(), cloud.at("sigma")[1].get<double>());
  result.config.cloud.offset = Eigen::Vector2d(cloud.at("offset")[0].get<double>(),
                                               cloud.at("offset")[1].get<double>());

  for (const Json& r : j.at("reports")) {
    SpectrumReport report;
    report.space = space_from_json(r.at("space"));
    if (r.contains("lambda")) {
      report.kernel = KernelSpec{r.at("lambda").get<double>(), r.at("q").get<double>()};
    }
    report.sample_size = r.at("sample_size").get<int>();
    report.tolerance = r.at("tolerance").get<double>();
    report.min_eigenvalue = r.at("min_eigenvalue").get<double>();
    const std::string verdict = r.at("verdict").get<std::string>();
    report.verdict = verdict == "PD"       ? Verdict::kPd
                     : verdict == "NOT_PD" ? Verdict::kNotPd
                     : verdict == "CND"    ? Verdict::kCnd
                                           : Verdict::kNotCnd;
    report.eigenvalues = r.at("eigenvalues").get<std::vector<double>>();
    result.reports.push_back(std::move(report));
  }
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    throw IoError("short write to " + path);
  }
}

std::vector<std::string> write_result_files(const ExperimentResult& result,
                                            const std::string& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    throw IoError("cannot create directory " + output_dir + ": " + ec.message());
  }
  const std::string stem =
      result.config.name.empty() ? std::string("experiment") : result.config.name;
  const std::string json_path = output_dir + "/" + stem + ".json";
  const std::string csv_path = output_dir + "/" + stem + ".csv";
  write_file(json_path, to_structured(result));
  write_file(csv_path, to_csv(result));
  return {json_path, csv_path};
}

DistanceMatrix read_distance_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    double value = 0.0;
    while (fields >> value) row.push_back(value);
    if (!fields.eof()) {
      throw ValidationError("non-numeric token in " + path + " line " +
                            std::to_string(rows.size() + 1));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) {
    throw ValidationError("matrix file " + path + " is empty");
  }
  Eigen::MatrixXd entries(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("matrix file " + path + " is not square: row " +
                            std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " of " + std::to_string(n) +
                            " entries");
    }
    for (std::size_t j = 0; j < n; ++j) entries(i, j) = rows[i][j];
  }
  DistanceMatrix d{std::move(entries), SpaceSpec{}};
  d.validate();
  return d;
}

std::vector<ExperimentConfig> standard_panels(std::int64_t seed_override) {
  // Pinned desk-scale panels; seeds select samples whose spectra show each
  // space's characteristic sign pattern on the default grid.
  std::vector<ExperimentConfig> panels;

  ExperimentConfig spd;
  spd.name = "spd";
  spd.space = spd_space(3, MetricVariant::kAffineInvariant);
  spd.variants = {MetricVariant::kAffineInvariant, MetricVariant::kFisher,
                  MetricVariant::kFrobenius, MetricVariant::kLogEuclidean};
  spd.sample_size = 100;
  spd.seed = 208;
  panels.push_back(spd);

  ExperimentConfig sphere;
  sphere.name = "sphere";
  sphere.space = sphere_space(64);
  sphere.sample_size = 200;
  sphere.seed = 7;
  panels.push_back(sphere);

  ExperimentConfig lines;
  lines.name = "grassmann_lines";
  lines.space = grassmann_space(50, 1, MetricVariant::kIntrinsic);
  lines.variants = {MetricVariant::kIntrinsic, MetricVariant::kChordal};
  lines.sample_size = 100;
  lines.seed = 7;
  panels.push_back(lines);

  ExperimentConfig frames;
  frames.name = "grassmann_frames";
  frames.space = grassmann_space(100, 15, MetricVariant::kIntrinsic);
  frames.sample_size = 100;
  frames.seed = 7;
  panels.push_back(frames);

  ExperimentConfig graph;
  graph.name = "graph";
  graph.space = graph_space();
  graph.sample_size = 124;
  graph.seed = 9;
  graph.graph_rule = NeighborRule::eps(1.3);
  panels.push_back(graph);

  if (seed_override >= 0) {
    for (ExperimentConfig& panel : panels) {
      panel.seed = static_cast<std::uint64_t>(seed_override);
    }
  }
  return panels;
}

}  // namespace geokernels
