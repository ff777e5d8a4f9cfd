#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace esf {

enum class Normalization { raw, max_row_sum, spectral };

std::string to_string(Normalization n);

/// Symmetric spatial weights matrix with zero diagonal and nonnegative
/// entries. Every row sum must be strictly positive (no isolated units),
/// which also rules out the all-zero matrix. Immutable after construction.
struct SpatialWeights {
  Eigen::MatrixXd values;
  Normalization normalization = Normalization::raw;
  double norm_factor = 1.0;  // divisor applied; 1 for raw

  int n() const { return static_cast<int>(values.rows()); }
};

/// Validates the invariants (exact symmetry after a 1e-12 tolerance check,
/// zero diagonal, nonnegative entries, positive row sums) and returns the
/// wrapped matrix. Throws std::invalid_argument on violation.
SpatialWeights make_spatial_weights(Eigen::MatrixXd values,
                                    Normalization normalization = Normalization::raw,
                                    double norm_factor = 1.0);

/// Random symmetric 0/1 adjacency with upper-triangle entries drawn i.i.d.
/// Bernoulli(mu/n) and mirrored. If any unit ends up isolated the whole
/// matrix is redrawn on the next seed substream, up to 1000 attempts.
/// Draws are reproducible: same (n, mu, rng_seed) gives the same matrix.
SpatialWeights build_bernoulli_swm(int n, double mu, std::uint64_t rng_seed);

/// Divides every entry by the maximum row sum. One scalar divisor, so
/// symmetry is preserved and the spectral radius of the result is <= 1.
SpatialWeights normalize_max_row_sum(const SpatialWeights& w);

/// Divides every entry by the spectral radius (largest |eigenvalue|).
SpatialWeights normalize_spectral(const SpatialWeights& w);

/// Orthonormal eigenvectors and eigenvalues of a decomposed weights matrix,
/// eigenvalues sorted non-increasing with ties kept in original order.
/// Column signs are fixed so the largest-magnitude entry of each
/// eigenvector is positive.
struct EigenBasis {
  Eigen::MatrixXd vectors;  // columns e_1..e_n
  Eigen::VectorXd values;   // lambda_1 >= ... >= lambda_n
  double source_norm_factor = 1.0;

  int n() const { return static_cast<int>(vectors.rows()); }
};

/// Full symmetric eigendecomposition of an arbitrary symmetric matrix.
/// Verifies orthonormality and reconstruction to 1e-10 and throws with
/// condition diagnostics if the solver fails.
EigenBasis symmetric_eigen(const Eigen::MatrixXd& m,
                           double source_norm_factor = 1.0);

EigenBasis decompose(const SpatialWeights& w);

/// E diag(lambda^p) E'; identical eigenvectors for every power p >= 1.
Eigen::MatrixXd matrix_power_via_basis(const EigenBasis& basis, int p);

// --- weights file formats -------------------------------------------------
//
// Dense: n rows x n columns of numbers, no header.
// Edge list: header "i,j,w" (w optional, default 1), 0-based indices, each
// undirected edge listed once.

SpatialWeights load_weights_csv(const std::string& path);
void save_weights_dense_csv(const SpatialWeights& w, const std::string& path);
void save_weights_edge_list_csv(const SpatialWeights& w, const std::string& path);

}  // namespace esf
