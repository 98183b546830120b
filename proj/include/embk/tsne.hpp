#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace embk {

/// Rows are points.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct PcaModel {
  Vector mean;
  Matrix axes;  // input_dims x d, orthonormal columns, descending variance
  Vector explained_variance;
};

PcaModel pca_fit(const Matrix& x, std::size_t d = 50);
Matrix pca_transform(const PcaModel& model, const Matrix& x);
Matrix pca_reconstruct(const PcaModel& model, const Matrix& z);

struct ConditionalAffinities {
  Matrix p;  // p(j|i) in row i
  Vector sigmas;
  double perplexity = 0.0;
  std::size_t unreachable = 0;  // rows whose search hit a bound
};

/// Gaussian conditionals with sigma_i calibrated so 2^H(P_i) (bits) matches
/// `perplexity`.
ConditionalAffinities conditional_affinities(const Matrix& x, double perplexity);

/// Perplexity 2^H of one row of conditionals.
double row_perplexity(const Matrix& p, Eigen::Index row);

struct AffinityMatrices {
  Matrix p;
  Vector sigmas;
  double perplexity = 0.0;
};

/// p_ij = (p(j|i) + p(i|j)) / 2n
AffinityMatrices symmetrize(const ConditionalAffinities& conditional);

/// Student-t joint affinities q_ij.
Matrix low_dim_affinities(const Matrix& y);

/// Fixed unit-bandwidth Gaussian conditionals q(j|i) for the asymmetric
/// variant.
Matrix sne_low_dim_conditionals(const Matrix& y);

/// sum p log(p / q), natural log; p = 0 terms are skipped, q = 0 under
/// p > 0 gives +inf. Applied to conditional matrices it is the row-summed
/// asymmetric cost.
double kl_divergence(const Matrix& p, const Matrix& q);

/// dL/dy_i = 4 sum_j (p_ij - q_ij)(y_i - y_j) / (1 + |y_i - y_j|^2)
Matrix tsne_gradient(const Matrix& p, const Matrix& y);

struct TsneConfig {
  double perplexity = 30.0;
  std::size_t out_dims = 2;
  std::size_t iterations = 1000;
  double lr = 100.0;
  double momentum_initial = 0.5;
  double momentum_final = 0.8;
  std::size_t momentum_switch = 250;
  double exaggeration = 4.0;
  std::size_t exaggeration_iterations = 100;
  std::uint64_t seed = 1;

  void validate(std::size_t n) const;
};

struct TsneResult {
  Matrix y;
  std::vector<double> kl;  // kl[0] at initialization, then one per iteration
};

TsneResult tsne_optimize(const Matrix& x, const TsneConfig& cfg);
TsneResult tsne_optimize_affinities(const Matrix& p, const TsneConfig& cfg);

/// Rows of a row-major buffer as a matrix.
Matrix rows_to_matrix(const std::vector<double>& rows, std::size_t dims);
std::vector<double> matrix_to_rows(const Matrix& m);

}  // namespace embk
