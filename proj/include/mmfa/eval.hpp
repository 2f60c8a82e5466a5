#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mmfa::eval {

// Representations are row-per-sample matrices throughout.
using Matrix = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Metrics

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

// Fraction of sample pairs on which the two partitions agree.
double rand_index(const std::vector<int>& a, const std::vector<int>& b);

// I(U; V) / sqrt(H(U) H(V)). Zero when either partition has zero entropy,
// except for two identical partitions, which score 1.
double nmi(const std::vector<int>& a, const std::vector<int>& b);

struct F1Result {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // No positive labels in the ground truth; f1 reported as 0.
  bool undefined = false;
};

F1Result f1_score(const std::vector<int>& predicted, const std::vector<int>& truth);

// ---------------------------------------------------------------------------
// Clustering

struct KMeansResult {
  std::vector<int> assignment;
  Matrix centroids;
  double inertia = 0.0;
};

// k-means++ seeding, Lloyd iterations, best inertia over `restarts` runs.
KMeansResult kmeans(const Matrix& x, int k, std::uint64_t seed, int restarts = 10, int max_iter = 300);

// Mean silhouette coefficient. Throws TaskError for fewer than two clusters
// or as many clusters as points.
double silhouette(const Matrix& x, const std::vector<int>& assignment);

struct ClusterMetrics {
  double rand_index = 0.0;
  double nmi = 0.0;
};

ClusterMetrics cluster_eval(const Matrix& x, const std::vector<int>& labels, int k, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Support-vector classifier (C-SVC, SMO with second-order working-set selection)

enum class Kernel { linear, rbf };

struct SvmParams {
  Kernel kernel = Kernel::rbf;
  double c = 1.0;
  // RBF width; <= 0 selects 1 / median squared pairwise distance of the train set.
  double gamma = 0.0;
  double tolerance = 1e-3;
  long max_iterations = 1000000;
};

class SvmClassifier {
 public:
  explicit SvmClassifier(SvmParams params = {}) : params_(params) {}

  void fit(const Matrix& x, const std::vector<int>& y);
  std::vector<int> predict(const Matrix& x) const;

  double gamma() const noexcept { return gamma_; }
  const std::vector<int>& classes() const noexcept { return classes_; }

 private:
  struct Binary {
    int positive = 0, negative = 0;
    std::vector<Eigen::Index> support;  // rows of train_
    Eigen::VectorXd coef;               // alpha_i y_i
    double rho = 0.0;
  };

  double kernel(const Eigen::Ref<const Eigen::RowVectorXd>& a, const Eigen::Ref<const Eigen::RowVectorXd>& b) const;

  SvmParams params_;
  double gamma_ = 0.0;
  Matrix train_;
  std::vector<int> classes_;
  std::vector<Binary> machines_;
};

// Fits on train, returns test accuracy. Throws TaskError on a single-class train set.
double classify_probe(const Matrix& train_x, const std::vector<int>& train_y, const Matrix& test_x,
                      const std::vector<int>& test_y, const SvmParams& params = {});

// ---------------------------------------------------------------------------
// Isolation forest

struct IsolationForestParams {
  std::size_t n_trees = 100;
  std::size_t sample_size = 256;
  std::uint64_t seed = 0;
};

class IsolationForest {
 public:
  explicit IsolationForest(IsolationForestParams params = {}) : params_(params) {}

  void fit(const Matrix& x);
  // Anomaly score 2^(-E[h(x)] / c(psi)); higher is more anomalous.
  Eigen::VectorXd score(const Matrix& x) const;

 private:
  struct Node {
    int feature = -1;  // -1 for a leaf
    double threshold = 0.0;
    int left = -1, right = -1;
    std::size_t size = 0;
  };
  using Tree = std::vector<Node>;

  int grow(Tree& tree, const Matrix& x, std::vector<Eigen::Index>& rows, std::size_t begin, std::size_t end,
           std::size_t depth, std::size_t max_depth, std::uint64_t& state) const;
  double path_length(const Tree& tree, const Eigen::Ref<const Eigen::RowVectorXd>& row) const;

  IsolationForestParams params_;
  std::size_t psi_ = 0;
  std::vector<Tree> trees_;
};

// Average unsuccessful-search path length in a binary search tree of n nodes.
double average_path_length(std::size_t n);

struct AnomalyResult {
  F1Result f1;
  double threshold = 0.0;
  double contamination = 0.0;
};

// Fits an isolation forest on train windows; flags test windows whose score is at
// or above the (1 - contamination) score quantile.
AnomalyResult anomaly_eval(const Matrix& train_x, const Matrix& test_x, const std::vector<int>& test_labels,
                           std::optional<double> contamination = std::nullopt, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Reports

enum class Task { classification, clustering, anomaly };
std::string to_string(Task t);
Task parse_task(const std::string& s);

struct EvalReport {
  Task task = Task::classification;
  std::string dataset;
  std::map<std::string, double> metrics;
  nlohmann::json config;

  // Throws TaskError if a metric lies outside [0, 1].
  void validate() const;
  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
};

// Merges reports into an aligned text table, one row per report.
std::string tabulate(const std::vector<std::pair<std::string, EvalReport>>& labeled_reports);

}  // namespace mmfa::eval
