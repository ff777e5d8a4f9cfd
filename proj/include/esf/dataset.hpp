#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace esf {

/// Response and regressor matrix. By convention x carries a leading
/// intercept column named "const" unless the caller opts out.
struct Dataset {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;
  std::vector<std::string> names;

  int n() const { return static_cast<int>(y.size()); }
  int k() const { return static_cast<int>(x.cols()); }
};

Dataset make_dataset(Eigen::VectorXd y, const Eigen::MatrixXd& regressors,
                     std::vector<std::string> regressor_names,
                     bool add_intercept = true);

/// Centered/scaled copy of a dataset plus everything needed to map
/// coefficients back to the original scale. y and the non-intercept columns
/// of X are centered and scaled to unit sample standard deviation; the
/// intercept column is left alone. A constant non-intercept column keeps
/// scale 1 (it then centers to zero and surfaces as a rank error downstream).
struct Standardized {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;
  double y_mean = 0;
  double y_scale = 1;
  Eigen::VectorXd x_mean;
  Eigen::VectorXd x_scale;
  int intercept_col = -1;  // -1 when absent
};

Standardized standardize(const Dataset& d);

/// Maps coefficients of the standardized fit (eigenvector block included)
/// back to the original scale. gamma rescales by y_scale only: eigenvector
/// columns are never centered or scaled.
struct Destandardized {
  Eigen::VectorXd beta;
  Eigen::VectorXd gamma;
};
Destandardized destandardize(const Standardized& s, const Eigen::VectorXd& beta_std,
                             const Eigen::VectorXd& gamma_std);

}  // namespace esf
