#include "geokernels/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "geokernels/errors.hpp"

namespace geokernels {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPd: return "PD";
    case Verdict::kNotPd: return "NOT_PD";
    case Verdict::kCnd: return "CND";
    case Verdict::kNotCnd: return "NOT_CND";
  }
  return "unknown";
}

double default_tolerance(const Eigen::MatrixXd& m) {
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  return 1e-8 * static_cast<double>(m.rows()) * scale;
}

std::vector<double> log_lambda_grid(double min, double max, int count) {
  if (!(min > 0.0) || !(max >= min) || count < 1) {
    throw ValidationError("lambda grid needs 0 < min <= max and count >= 1");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = min;
    return grid;
  }
  const double lo = std::log10(min);
  const double hi = std::log10(max);
  for (int i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, lo + (hi - lo) * i / (count - 1));
  }
  return grid;
}

std::vector<double> default_lambda_grid() { return log_lambda_grid(1e-2, 1e3, 20); }

namespace {

void require_symmetric(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) {
    throw ValidationError("matrix must be square");
  }
  if (s.rows() == 0) {
    throw ValidationError("matrix must be nonempty");
  }
  const double scale = std::max(1e-300, s.cwiseAbs().maxCoeff());
  const double dev = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (dev > 1e-10 * scale) {
    throw ValidationError("matrix is not symmetric: max asymmetry " +
                          std::to_string(dev));
  }
}

// Columns 2..n of the Householder reflector taking e1 to the normalized
// all-ones vector: an orthonormal basis of the complement of ones.
Eigen::MatrixXd ones_complement_basis(Eigen::Index n) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  v(0) -= 1.0;
  v.normalize();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
  return h.rightCols(n - 1);
}

}  // namespace

std::vector<double> eigenspectrum(const Eigen::MatrixXd& symmetric) {
  require_symmetric(symmetric);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (symmetric + symmetric.transpose()),
                                                    Eigen::EigenvaluesOnly);
  std::vector<double> eigs(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

std::pair<Verdict, double> pd_verdict(const Eigen::MatrixXd& k, double tol) {
  if (tol < 0.0) tol = default_tolerance(k);
  const auto eigs = eigenspectrum(k);
  const double min_eig = eigs.back();
  return {min_eig >= -tol ? Verdict::kPd : Verdict::kNotPd, min_eig};
}

std::pair<Verdict, double> cnd_verdict(const Eigen::MatrixXd& d, double tol) {
  require_symmetric(d);
  const auto n = d.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) {
      throw ValidationError("cnd check requires a zero diagonal, entry " +
                            std::to_string(i) + " is " + std::to_string(d(i, i)));
    }
  }
  if (tol < 0.0) tol = default_tolerance(d);
  if (n == 1) {
    return {Verdict::kCnd, 0.0};  // no zero-sum coefficients besides 0
  }
  const Eigen::MatrixXd basis = ones_complement_basis(n);
  const Eigen::MatrixXd restricted = basis.transpose() * (-d) * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (restricted + restricted.transpose()), Eigen::EigenvaluesOnly);
  const double witness = es.eigenvalues().minCoeff();
  return {witness >= -tol ? Verdict::kCnd : Verdict::kNotCnd, witness};
}

LambdaSweep lambda_sweep(const DistanceMatrix& d, double q,
                         const std::vector<double>& grid) {
  if (grid.empty()) {
    throw ValidationError("lambda grid must be nonempty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) {
      throw ValidationError("lambda grid entries must be positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ValidationError("lambda grid must be strictly increasing");
    }
  }
  LambdaSweep sweep;
  sweep.grid = grid;
  sweep.q = q;
  sweep.worst_eigenvalue = std::numeric_limits<double>::infinity();
  for (double lambda : grid) {
    const GramMatrix gram = gram_matrix(d, KernelSpec{lambda, q});
    const auto [verdict, min_eig] = pd_verdict(gram.entries);
    sweep.min_eigenvalues.push_back(min_eig);
    sweep.worst_eigenvalue = std::min(sweep.worst_eigenvalue, min_eig);
    if (verdict == Verdict::kNotPd) {
      sweep.failing_lambdas.push_back(lambda);
    }
  }
  return sweep;
}

SchonbergReport schonberg_crosscheck(const DistanceMatrix& d,
                                     const std::vector<double>& grid) {
  d.validate();
  SchonbergReport report;
  const auto [verdict, witness] = cnd_verdict(d.entries);
  report.cnd = verdict;
  report.cnd_witness = witness;
  report.laplacian_sweep = lambda_sweep(d, 1.0, grid);
  report.consistent =
      (verdict == Verdict::kCnd) == report.laplacian_sweep.pd_for_all_tested();
  return report;
}

SpectrumReport spectrum_report(const GramMatrix& gram) {
  SpectrumReport report;
  report.eigenvalues = eigenspectrum(gram.entries);
  report.min_eigenvalue = report.eigenvalues.back();
  report.tolerance = default_tolerance(gram.entries);
  report.verdict =
      report.min_eigenvalue >= -report.tolerance ? Verdict::kPd : Verdict::kNotPd;
  report.kernel = gram.kernel;
  report.space = gram.space;
  report.sample_size = gram.size();
  return report;
}

}  // namespace geokernels
