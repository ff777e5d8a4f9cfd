#pragma once

#include <Eigen/Dense>
#include <vector>

namespace esf {

/// Partially penalized Lasso instance
///
///   min_{beta, gamma}  ||y - X beta - E gamma||_2^2 + theta ||gamma||_1
///
/// with the structural block X unpenalized. The squared error term is not
/// halved and carries no 1/n, so the soft-threshold level inside the solver
/// is theta/2. Callers standardize y and X; eigenvector columns keep unit
/// Euclidean norm.
struct PartialLassoProblem {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;  // n x k, full column rank
  Eigen::MatrixXd e;  // n x p_e penalized candidates
  double theta = 0;   // > 0
};

struct LassoSolution {
  Eigen::VectorXd gamma;
  Eigen::VectorXd beta;
  std::vector<int> selected;  // indices with gamma != 0, ascending
  double objective = 0;
  int iterations = 0;  // completed coordinate sweeps
  double max_kkt_violation = 0;
  double theta = 0;
  bool converged = false;
};

struct SolveOptions {
  double tol = 1e-8;        // max absolute coefficient change per sweep
  double kkt_tol = 1e-6;    // scaled by max(theta, 1)
  int max_sweeps = 100000;
  bool check_descent = false;  // assert the objective never increases
};

struct FwlParts {
  Eigen::VectorXd y_tilde;  // M_X y
  Eigen::MatrixXd e_tilde;  // M_X E
};

/// Projects y and the candidate columns off col(X).
FwlParts fwl_partial_out(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         const Eigen::MatrixXd& e);

/// Cyclic coordinate descent with soft thresholding on an already
/// partialled-out design. Holds the warm-start state, so a tuning-parameter
/// path can be walked cheaply by calling run() repeatedly on one instance.
class CoordinateDescent {
 public:
  CoordinateDescent(Eigen::VectorXd y_tilde, Eigen::MatrixXd e_tilde);

  struct RunResult {
    int iterations = 0;
    double max_kkt_violation = 0;
    bool converged = false;
  };

  /// Solves at the given theta starting from the current gamma. Columns
  /// annihilated by the projection (zero norm) stay frozen at zero.
  RunResult run(double theta, const SolveOptions& opts = {});

  const Eigen::VectorXd& gamma() const { return gamma_; }
  void reset();  // gamma back to zero

  /// 2 * max_j |e_tilde_j . y_tilde|; any theta at or above it yields
  /// gamma = 0.
  double theta_max() const;

  /// Stationarity violation of the current gamma at theta: for active j,
  /// |2 e_j.r - theta sign(gamma_j)|; for inactive j, the excess of
  /// |2 e_j.r| over theta.
  double kkt_violation(double theta) const;

  double penalized_rss() const;  // ||y_tilde - E_tilde gamma||^2

 private:
  double sweep(double threshold, bool active_only);
  void refresh_residual();

  Eigen::VectorXd y_;
  Eigen::MatrixXd e_;
  Eigen::VectorXd col_sq_;  // cached e_j . e_j
  Eigen::VectorXd gamma_;
  Eigen::VectorXd resid_;
  int sweeps_since_refresh_ = 0;
};

/// Full pipeline: partial X out, solve for gamma, recover beta by OLS of
/// (y - E gamma) on X, and certify the KKT conditions. Throws on theta <= 0;
/// a fit that exhausts max_sweeps is returned with converged = false.
LassoSolution solve_partial_lasso(const PartialLassoProblem& problem,
                                  const SolveOptions& opts = {});

/// Smallest theta with an all-zero penalized block.
double theta_max(const PartialLassoProblem& problem);

struct PostLassoFit {
  Eigen::VectorXd beta;       // structural coefficients
  Eigen::VectorXd gamma_sel;  // coefficients of the kept eigenvectors
  Eigen::VectorXd se_plain;   // [beta, gamma_sel] order
  Eigen::VectorXd se_robust;  // HC1
  std::vector<int> kept;      // positions into e_selected that survived
  std::vector<int> dropped;   // collinear columns removed, by position
  Eigen::VectorXd residuals;
  double rss = 0;
};

/// OLS refit on [X, E_selected]. Later-indexed eigenvector columns that are
/// collinear with the preceding design are dropped. Plain standard errors
/// use sigma^2 (G'G)^-1; robust ones the HC1 sandwich scaled by n/(n-m).
PostLassoFit post_lasso_refit(const Eigen::MatrixXd& x,
                              const Eigen::MatrixXd& e_selected,
                              const Eigen::VectorXd& y);

}  // namespace esf
