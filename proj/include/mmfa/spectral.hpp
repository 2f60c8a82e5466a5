#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace mmfa::spectral {

// Node set: one node per (sample, view). View 0 is the raw series, views
// 1..k the transformed features. Node index = view * n_samples + sample.
struct EquivalenceGraph {
  struct Node {
    std::size_t sample;
    std::size_t view;
  };

  std::vector<Node> nodes;
  Eigen::MatrixXd weights;  // symmetric, non-negative, zero diagonal
  Eigen::VectorXd degrees;  // row sums of weights

  std::size_t size() const noexcept { return nodes.size(); }

  // Checks symmetry, non-negativity and the zero diagonal.
  void validate() const;
};

// Wraps an explicit weight matrix; nodes are labeled (i, 0).
EquivalenceGraph graph_from_weights(const Eigen::MatrixXd& weights);

struct GraphConfig {
  // Gaussian bandwidth for intra-modal edges; <= 0 selects the median pairwise
  // distance within each view.
  double sigma = 0.0;
  std::size_t knn = 5;
  // Reject graphs with zero-degree nodes.
  bool reject_isolated = true;
};

// view_features[v] is N x F_v, one flattened view per row. Cross-modal edges of
// weight 1/k join every pair of views of one sample; intra-modal edges are a
// symmetrized kNN Gaussian kernel exp(-dist^2 / (2 sigma^2)) within each view.
EquivalenceGraph build_graph(const std::vector<Eigen::MatrixXd>& view_features, const GraphConfig& cfg = {});

std::size_t connected_components(const Eigen::MatrixXd& weights);

struct SpectralResult {
  Eigen::VectorXd eigenvalues;   // ascending, size d + 1
  Eigen::MatrixXd eigenvectors;  // n x (d + 1), columns D-orthonormal
};

// Smallest d + 1 solutions of (D - W) v = lambda D v, trivial pair included.
SpectralResult le_embed(const EquivalenceGraph& g, std::size_t d);

struct ResidualReport {
  // |sum_ij w_ij (f_i - f_j)^2 - 2 lambda sum_i deg_i f_i^2| per eigenpair.
  std::vector<double> residuals;
  double max_residual = 0.0;
};

ResidualReport theorem1_check(const EquivalenceGraph& g, const SpectralResult& result);

struct AlignmentScore {
  double score = 0.0;  // mean squared canonical correlation, in [0, 1]
  bool degenerate = false;
  Eigen::Index embedding_rank = 0;
};

// Canonical correlation between node embeddings (n x p) and target
// eigenvectors (n x d). Invariant under invertible linear maps of either side.
AlignmentScore eigenspace_alignment(const Eigen::MatrixXd& embedding, const Eigen::MatrixXd& eigenvectors);

// "node_a,node_b,weight" per edge with a < b.
void write_edge_list(std::ostream& out, const EquivalenceGraph& g);

}  // namespace mmfa::spectral
