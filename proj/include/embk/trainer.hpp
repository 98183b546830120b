#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "embk/embedding.hpp"
#include "embk/losses.hpp"
#include "embk/network.hpp"
#include "embk/pairing.hpp"

namespace embk {

enum class LossKind { kSoftmax, kContrastive, kGeneralized };

std::string to_string(LossKind kind);
LossKind loss_kind_from_string(std::string_view name);

struct TrainConfig {
  double lr = 0.01;
  std::size_t batch_size = 64;
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  std::size_t eval_every = 20;
  LossKind loss = LossKind::kContrastive;

  void validate() const;
};

struct LossRecord {
  std::size_t iteration = 0;
  std::string split;  // "train", "test" or "common"
  double loss = 0.0;
  friend bool operator==(const LossRecord&, const LossRecord&) = default;
};

struct LossHistory {
  std::vector<LossRecord> records;

  /// Throws Error unless `iteration` exceeds the last one recorded for `split`.
  void add(std::size_t iteration, const std::string& split, double loss);
  std::vector<LossRecord> of_split(const std::string& split) const;

  /// `iteration,split,loss`
  std::string to_csv() const;
  void write_csv(const std::string& path) const;
  static LossHistory parse_csv(std::string_view text);
  static LossHistory read_csv(const std::string& path);

  friend bool operator==(const LossHistory&, const LossHistory&) = default;
};

/// Pair loss selected by kind; kSoftmax is not a pair loss.
struct SiameseLoss {
  LossKind kind = LossKind::kContrastive;
  ContrastiveConfig contrastive;
  GeneralizedConfig generalized;

  /// Throws ConfigError unless the loss fits `output_size` and label arity.
  void validate(std::size_t output_size, std::size_t label_arity) const;
  PairLossResult operator()(const Tensor& a, const Tensor& b, const PairLabel& label) const;
  double value(const double* a, const double* b, std::size_t n, const PairLabel& label) const;
};

struct PairSet {
  const std::vector<PairRecord>* pairs = nullptr;
  const std::vector<Tensor>* inputs = nullptr;
};

struct LabeledSet {
  const std::vector<Tensor>* inputs = nullptr;
  const std::vector<int>* labels = nullptr;
};

struct TrainResult {
  ParameterStore params;
  LossHistory history;
};

/// Called with the iteration count (0 before the first step) whenever the
/// test loss is evaluated.
using EvalHook = std::function<void(std::size_t iteration, const ParameterStore& params)>;

TrainResult train_classifier(const NetworkSpec& spec, ParameterStore params,
                             const LabeledSet& train, const TrainConfig& cfg,
                             const LabeledSet* test = nullptr, const EvalHook& hook = {});

TrainResult train_siamese(const NetworkSpec& spec, ParameterStore params, const PairSet& train,
                          const TrainConfig& cfg, const SiameseLoss& loss,
                          const PairSet* test = nullptr, const EvalHook& hook = {});

/// Network outputs for every input, row-major (n x output_size).
std::vector<double> embed_rows(const NetworkSpec& spec, const ParameterStore& params,
                               const std::vector<Tensor>& inputs);

Embedding embed(const NetworkSpec& spec, const ParameterStore& params,
                const std::vector<ImageSample>& samples, const std::string& split = "train");

/// Mean pair loss with a single forward pass per distinct input.
double mean_pair_loss(const NetworkSpec& spec, const ParameterStore& params, const PairSet& set,
                      const SiameseLoss& loss);

double mean_xent_loss(const NetworkSpec& spec, const ParameterStore& params,
                      const LabeledSet& set);
double classification_accuracy(const NetworkSpec& spec, const ParameterStore& params,
                               const LabeledSet& set);

}  // namespace embk
