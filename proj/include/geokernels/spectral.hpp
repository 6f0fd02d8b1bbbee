#ifndef GEOKERNELS_SPECTRAL_HPP
#define GEOKERNELS_SPECTRAL_HPP

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "geokernels/kernels.hpp"
#include "geokernels/space.hpp"

namespace geokernels {

enum class Verdict { kPd, kNotPd, kCnd, kNotCnd };
std::string to_string(Verdict v);

// Eigenvalues of one analyzed matrix, sorted descending, with the verdict
// reached at the stated tolerance.
struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kPd;
  std::optional<KernelSpec> kernel;
  SpaceSpec space;
  int sample_size = 0;
};

// Minimum Gram eigenvalue per grid bandwidth for a fixed exponent q.
// pd_for_all_tested() approximates the "for every bandwidth" quantifier on
// the tested grid; failures carry the witnessing lambdas.
struct LambdaSweep {
  std::vector<double> grid;
  double q = 0.0;
  std::vector<double> min_eigenvalues;  // one per grid point
  std::vector<double> failing_lambdas;
  double worst_eigenvalue = 0.0;

  bool pd_for_all_tested() const { return failing_lambdas.empty(); }
};

struct SchonbergReport {
  Verdict cnd;               // verdict on the distance matrix itself
  double cnd_witness = 0.0;  // most negative restricted eigenvalue
  LambdaSweep laplacian_sweep;
  bool consistent = false;  // CND <=> sweep passed everywhere
};

// Relative tolerance below which an eigenvalue counts as a violation.
// Eigenvalue round-off grows with both n and the entry scale, so a fixed
// absolute threshold misclassifies large samples.
double default_tolerance(const Eigen::MatrixXd& m);

// 20 logarithmically spaced bandwidths in [1e-2, 1e3].
std::vector<double> default_lambda_grid();
std::vector<double> log_lambda_grid(double min, double max, int count);

// All real eigenvalues of a symmetric matrix, descending. Asymmetry beyond
// 1e-10 * max|entry| is a ValidationError.
std::vector<double> eigenspectrum(const Eigen::MatrixXd& symmetric);

// PD iff the minimum eigenvalue is >= -tol. tol < 0 selects the default.
std::pair<Verdict, double> pd_verdict(const Eigen::MatrixXd& k, double tol = -1.0);

// CND iff -J*D*J restricted to the complement of the all-ones vector is
// positive semidefinite (J the centering projector). The all-ones direction
// is removed by deflation with an explicit orthonormal basis, not by
// constrained optimization. Returns the most negative restricted eigenvalue
// as witness. A 1x1 matrix is vacuously CND.
std::pair<Verdict, double> cnd_verdict(const Eigen::MatrixXd& d, double tol = -1.0);

// Minimum Gram eigenvalue of exp(-lambda * D^q) for every lambda in grid.
LambdaSweep lambda_sweep(const DistanceMatrix& d, double q,
                         const std::vector<double>& grid);

// Checks the equivalence "D is CND on the sample <=> the q = 1 kernel is
// PD at every tested bandwidth" and reports both witnesses.
SchonbergReport schonberg_crosscheck(const DistanceMatrix& d,
                                     const std::vector<double>& grid);

// Report for one Gram matrix (spectrum + PD verdict).
SpectrumReport spectrum_report(const GramMatrix& gram);

}  // namespace geokernels

#endif
