#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "esf/estimators.hpp"
#include "esf/rng.hpp"
#include "esf/spatial_weights.hpp"

namespace esf {

/// One grid point of the simulation study. The data-generating process is
///
///   y = sum_i rho_i W^i y + beta x + psi W x + r,    r = delta W r + v
///
/// with x, v standard normal, solved through the reduced form
/// y = S1^-1 (beta x + psi W x + S2^-1 v), S1 = I - sum_i rho_i W^i,
/// S2 = I - delta W.
struct SimulationSpec {
  int n = 100;
  double mu = 8;
  int p = 1;
  std::vector<double> rho{0.5};
  double beta = 1.0;
  double psi = 0.9;
  double delta = 0.0;
  int reps = 200;
  std::uint64_t seed = 0;
  std::vector<Method> estimators{Method::mi_lasso};
  std::string setup_label;
  bool redraw_w = true;  // fresh W per replication; false fixes one W per cell
  CvOptions cv;
  FstepZConfig fstep;
};

/// Paper-style preset grids. Setup A: p=1 over a rho grid; setup B: p=3 with
/// rho = (0.6, 0.4, 0.5).
std::vector<SimulationSpec> setup_a_grid(const std::vector<int>& n_list,
                                         const std::vector<double>& mu_list,
                                         const std::vector<double>& rho_list,
                                         int reps, std::uint64_t seed,
                                         const std::vector<Method>& estimators);
SimulationSpec setup_b_spec(int n, double mu, int reps, std::uint64_t seed,
                            const std::vector<Method>& estimators);

struct EstimatorCellSummary {
  Method estimator = Method::ols;
  double bias = 0;
  double mse = 0;
  double mean_selected = 0;
  double median_selected = 0;
  double mean_runtime_seconds = 0;
  int reps_completed = 0;
  int failures = 0;
};

struct GridCellSummary {
  SimulationSpec spec;  // echo of the grid point
  std::vector<EstimatorCellSummary> rows;
  int w_redraws = 0;  // condition-guard redraws across replications
};

struct SimulationSummary {
  std::vector<GridCellSummary> cells;
};

struct SimulatedData {
  Eigen::VectorXd y;
  Eigen::VectorXd x;
};

/// Draws x and v and solves the reduced form. Throws if S1 or S2 is
/// ill-conditioned (spectral condition number above 1e10); run_grid treats
/// that as a W redraw.
SimulatedData simulate_y(const SimulationSpec& spec, const SpatialWeights& w,
                         const EigenBasis& basis, Rng& rng);

/// Runs every replication of every grid point. Replications are independent
/// substreams keyed by (seed, grid index, rep index) and may execute in
/// parallel; the aggregation is an ordered reduction over rep index, so the
/// summary is bitwise identical for any thread count.
SimulationSummary run_grid(const std::vector<SimulationSpec>& specs,
                           int threads = 1);

/// Serial reference path: same contract as run_grid with threads = 1,
/// bypassing the parallel kernel entirely. Kept for equivalence testing and
/// the thread-scaling benchmark.
SimulationSummary run_grid_serial(const std::vector<SimulationSpec>& specs);

std::string summary_to_csv(const SimulationSummary& summary,
                           bool include_timings);

struct BenchRow {
  int n = 0;
  Method method = Method::mi_lasso;
  double seconds = 0;
  double relative = 0;  // normalized to mi_lasso = 1
  double decompose_seconds = 0;
  bool skipped = false;
};

struct BenchOptions {
  std::vector<Method> methods{Method::mi_lasso, Method::cv_lasso, Method::fstep_z};
  std::uint64_t seed = 0;
  double mu = 8;
  double rho1 = 0.3;
  int fstep_ceiling = 2000;  // fstep_z skipped above this n unless forced
  bool force = false;
  CvOptions cv;
};

/// Wall-clock per method per n on identical data, eigendecomposition
/// excluded from the timed region and reported separately.
std::vector<BenchRow> run_timing_benchmark(const std::vector<int>& n_list,
                                           const BenchOptions& opts);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

// --- theory-consequence suite ----------------------------------------------

struct TheorySuiteConfig {
  std::vector<int> sizes{100, 200, 400, 800};
  int reps = 200;
  int sparsity = 3;          // |Omega|
  double gamma_amplitude = 1.0;  // per sqrt(n)-scaled eigenvector column
  double mu = 8;
  std::uint64_t seed = 1;
  int re_samples = 10000;    // random cone directions for the tau estimate
  double re_bbar = 2.0;      // cone constant (b=3)
  int threads = 1;
};

struct TheorySizeResult {
  int n = 0;
  double median_l1_error = 0;
  double median_l2_error = 0;
  double sign_recovery_rate = 0;
  double tau_min_upper_bound = 0;  // sampling estimate, context only
};

struct TheorySuiteReport {
  std::vector<TheorySizeResult> per_size;
  bool l1_non_increasing = false;
  bool l2_non_increasing = false;
  bool sign_rate_non_decreasing = false;
  bool passed = false;
};

/// Exact-sparsity DGP y = X beta + E_Omega gamma_Omega + v with a fixed
/// seeded W per size (the theory conditions hold conditional on realized
/// E). Checks the error-decay and sign-recovery consequences and estimates
/// the restricted eigenvalue by cone sampling.
TheorySuiteReport theory_suite(const TheorySuiteConfig& config = {});

}  // namespace esf
