#pragma once

#include <Eigen/Dense>

#include "esf/spatial_weights.hpp"

namespace esf {

/// Annihilator projection M_X = I - X(X'X)^-1 X', applied implicitly
/// through an orthonormal basis Q of col(X). The dense projector is only
/// materialized on request.
class ResidualMaker {
 public:
  /// Throws std::invalid_argument naming the first dependent column if X is
  /// rank deficient.
  explicit ResidualMaker(const Eigen::MatrixXd& x);

  int n() const { return static_cast<int>(q_.rows()); }
  int k() const { return static_cast<int>(q_.cols()); }

  /// M_X y
  Eigen::VectorXd residuals(const Eigen::VectorXd& y) const;
  /// M_X A, column by column
  Eigen::MatrixXd annihilate(const Eigen::MatrixXd& a) const;
  /// Orthonormal basis of col(X)
  const Eigen::MatrixXd& q() const { return q_; }
  /// Dense M_X
  Eigen::MatrixXd projector() const;

 private:
  Eigen::MatrixXd q_;
};

/// Moran's I of a residual vector: u'Wu / u'u. Throws on a zero vector.
double moran_i(const Eigen::VectorXd& residuals, const SpatialWeights& w);

struct MoranResult {
  double m = 0;
  double expected_m = 0;
  double variance_m = 0;
  double z = 0;
  int n = 0;
  int k = 0;
};

/// Standardized Moran Z on the residuals of y regressed on X.
///
/// With A = M_X W M_X the null moments are
///   E[m]   = tr(A) / (n - k)
///   var(m) = 2[(n-k) tr(A^2) - tr(A)^2] / [(n-k)^2 (n-k-2)]
/// and z = (m - E[m]) / sqrt(var(m)). The traces are evaluated through the
/// orthonormal factor Q of X, never through the dense projector:
///   tr(A)   = tr(W) - tr(Q'WQ)
///   tr(A^2) = tr(W^2) - 2 ||WQ||_F^2 + ||Q'WQ||_F^2
///
/// Requires n - k - 2 > 0 and variance_m > 0.
MoranResult standardized_moran(const Eigen::VectorXd& y,
                               const Eigen::MatrixXd& x,
                               const SpatialWeights& w);

}  // namespace esf
