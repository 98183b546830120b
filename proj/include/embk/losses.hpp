#pragma once

#include <cstdint>
#include <vector>

#include "embk/tensor.hpp"

namespace embk {

struct ContrastiveConfig {
  double margin = 1.0;
};

/// Per-label contrastive terms on contiguous embedding sub-blocks.
/// Label component i owns dims [offset_i, offset_i + dims[i]) where offsets
/// follow declaration order.
struct GeneralizedConfig {
  std::vector<std::size_t> dims;
  std::vector<double> margins;

  std::size_t components() const { return dims.size(); }
  std::size_t total_dims() const;
  std::size_t offset(std::size_t component) const;
  /// Throws ConfigError unless dims/margins are consistent, positive and sum
  /// to `embedding_dims`.
  void validate(std::size_t embedding_dims) const;
};

/// Y components in {0,1}; 1 marks a similar pair.
using PairLabel = std::vector<std::uint8_t>;

struct LossResult {
  double loss = 0.0;
  Tensor grad;
};

struct PairLossResult {
  double loss = 0.0;
  Tensor grad_a;
  Tensor grad_b;
};

/// -log softmax(logits)[cls]; gradient softmax - one_hot.
LossResult softmax_xent(const Tensor& logits, std::size_t cls);

/// 0.5 * y * d^2 + 0.5 * (1 - y) * max(0, m - d)^2 with d = |a - b|_2.
/// Gradients are zero at d = 0.
PairLossResult contrastive(const Tensor& out_a, const Tensor& out_b, int y,
                           const ContrastiveConfig& cfg);

PairLossResult generalized_contrastive(const Tensor& out_a, const Tensor& out_b,
                                       const PairLabel& label, const GeneralizedConfig& cfg);

/// Loss value only, on raw coordinate spans (used by evaluation code).
double contrastive_value(const double* a, const double* b, std::size_t n, int y, double margin);

}  // namespace embk
