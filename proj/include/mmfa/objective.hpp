#pragma once

#include <Eigen/Dense>

#include <vector>

namespace mmfa::objective {

// Z reshaped per view: views[0] holds the raw-series encoder outputs, views[1..k]
// the modality encoder outputs. Each view is N x d; row i is sample i.
struct RepresentationBatch {
  std::vector<Eigen::MatrixXd> views;

  std::size_t k() const noexcept { return views.empty() ? 0 : views.size() - 1; }
  Eigen::Index samples() const { return views.empty() ? 0 : views.front().rows(); }
  Eigen::Index dim() const { return views.empty() ? 0 : views.front().cols(); }

  // Throws ShapeError on k < 1, N < min_samples or mismatched views,
  // NumericError on non-finite entries.
  void validate(Eigen::Index min_samples = 2) const;
};

struct ObjectiveConfig {
  double alpha = 25.0;  // covariance term
  double beta = 25.0;   // variance hinge
  double gamma = 1.0;   // invariance
  double eps_var = 1e-7;

  void validate() const;
};

struct LossBreakdown {
  double cov = 0.0;
  double var = 0.0;
  double inv = 0.0;
  double total = 0.0;
};

// (1 / (N (k+1))) sum_i sum_{m=1..k} ||z0_i - zm_i||^2
double inv_loss(const RepresentationBatch& z);

// Full pairwise form (1 / (N k (k+1))) sum_{m != n} sum_i ||zm_i - zn_i||^2.
double pairwise_inv_loss(const RepresentationBatch& z);

// Right-hand side of the pairwise bound: (2 / (N (k+1))) sum_i sum_m ||z0_i - zm_i||^2.
double pairwise_inv_bound(const RepresentationBatch& z);

// (1 / (d (k+1))) sum_l sum_j max(0, 1 - sqrt(Var(z^l_{., j}) + eps)), unbiased variance.
double var_hinge_loss(const RepresentationBatch& z, double eps_var);

// (1 / ((k+1) d)) sum_l sum_{m != n} C^l_{mn}^2 with C^l the unbiased covariance of view l.
double cov_offdiag_loss(const RepresentationBatch& z);

LossBreakdown total_loss(const RepresentationBatch& z, const ObjectiveConfig& cfg);

// Same value as total_loss; also writes d total / d views[l] into `grad`.
LossBreakdown total_loss_with_grad(const RepresentationBatch& z, const ObjectiveConfig& cfg,
                                   std::vector<Eigen::MatrixXd>& grad);

}  // namespace mmfa::objective
