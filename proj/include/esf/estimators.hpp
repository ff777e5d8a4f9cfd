#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esf/dataset.hpp"
#include "esf/lasso.hpp"
#include "esf/moran.hpp"
#include "esf/spatial_weights.hpp"

namespace esf {

enum class Method { ols, mi_lasso, mi_plasso, cv_lasso, cv_plasso, fstep_z, chun };

std::string to_string(Method m);
Method method_from_string(const std::string& name);  // accepts "mi-lasso" or "mi_lasso"

struct SolverDiagnostics {
  double objective = 0;
  int iterations = 0;
  double max_kkt_violation = 0;
  bool converged = true;
};

/// Uniform output of every selection procedure. z_before and z_after come
/// from the same standardized Moran operation against the same W; z_after
/// conditions on the selected eigenvectors.
struct EstimationReport {
  Method method = Method::ols;
  std::vector<std::string> names;
  Eigen::VectorXd beta;
  Eigen::VectorXd se_plain;
  Eigen::VectorXd se_robust;
  std::vector<int> selected_eigs;  // ascending, duplicate-free
  std::optional<double> theta;
  double z_before = 0;
  double z_after = 0;
  double adj_r2 = 0;
  double runtime_seconds = 0;
  std::optional<SolverDiagnostics> solver_diag;
  std::vector<int> cv_folds;  // per-row fold id when CV ran
  bool no_spatial_correlation = false;
  bool max_steps_exhausted = false;
};

/// Moran's I Lasso: theta = 1/Z^2 from the naive-regression residuals, then
/// one partially penalized Lasso over the full eigenvector candidate set.
/// |Z| below 1e-8 short-circuits to plain OLS with an empty selection and
/// the no_spatial_correlation flag (gamma = 0 is the limit of unbounded
/// regularization). post = true refits OLS on the selected set.
EstimationReport mi_lasso(const Dataset& data, const EigenBasis& basis,
                          const SpatialWeights& w, bool post);

/// One Lasso solve shared between the shrinkage and post-OLS variants.
std::pair<EstimationReport, EstimationReport> mi_lasso_pair(
    const Dataset& data, const EigenBasis& basis, const SpatialWeights& w);

struct CvOptions {
  int folds = 5;
  std::uint64_t rng_seed = 0;
  int max_evals = 40;        // Brent budget on log(theta)
  double bracket_floor = 1e-4;  // lower bracket as a fraction of theta_max
};

/// K-fold cross-validated Lasso: out-of-fold squared prediction error
/// minimized over log(theta) with Brent's method, bracket anchored at the
/// full-data theta_max. Fold assignment is seeded and recorded in the
/// report.
EstimationReport cv_lasso(const Dataset& data, const EigenBasis& basis,
                          const SpatialWeights& w, bool post,
                          const CvOptions& opts = {});

std::pair<EstimationReport, EstimationReport> cv_lasso_pair(
    const Dataset& data, const EigenBasis& basis, const SpatialWeights& w,
    const CvOptions& opts = {});

enum class CandidateFilter { all, positive_eigs, ratio_threshold };

struct FstepZConfig {
  double epsilon = 0.1;
  CandidateFilter candidate_filter = CandidateFilter::all;
  double ratio = 0.25;   // lambda/lambda_max threshold for ratio_threshold
  int max_steps = -1;    // -1 resolves to n - k - 3
  int threads = 1;       // candidate scan parallelism
};

/// Forward stepwise search: at each step adds the candidate whose inclusion
/// minimizes |Z| of the refreshed OLS residuals (ties to the lower index),
/// stopping once |Z| < epsilon. The scan may run in parallel; the argmin
/// reduction is deterministic (value, then index).
EstimationReport fstep_z(const Dataset& data, const EigenBasis& basis,
                         const SpatialWeights& w, const FstepZConfig& config = {});

/// Simulation-calibrated candidate-count rule mapping Moran's I and the
/// number of positive-eigenvalue eigenvectors to a suggested selection size.
/// Diagnostic only; requires m > -0.6. Result rounded to nearest and clamped
/// to [0, n_pos].
int chun_candidate_count(double m, int n_pos);

EstimationReport ols_baseline(const Dataset& data, const SpatialWeights& w);

}  // namespace esf
