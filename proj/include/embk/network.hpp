#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "embk/tensor.hpp"

namespace embk {

// Layer descriptions. Convolution is valid (unpadded) cross-correlation.
struct Convolution {
  std::size_t out_channels = 1;
  std::size_t kernel_h = 1;
  std::size_t kernel_w = 1;
  std::size_t stride = 1;
  friend bool operator==(const Convolution&, const Convolution&) = default;
};

struct MaxPool {
  std::size_t window = 2;
  std::size_t stride = 2;
  friend bool operator==(const MaxPool&, const MaxPool&) = default;
};

/// Fully connected layer; any input rank is flattened first.
struct InnerProduct {
  std::size_t out_units = 1;
  friend bool operator==(const InnerProduct&, const InnerProduct&) = default;
};

struct ReLU {
  friend bool operator==(const ReLU&, const ReLU&) = default;
};

struct Flatten {
  friend bool operator==(const Flatten&, const Flatten&) = default;
};

using LayerSpec = std::variant<Convolution, MaxPool, InnerProduct, ReLU, Flatten>;

std::string layer_kind(const LayerSpec& layer);
bool is_trainable(const LayerSpec& layer);

struct NetworkSpec {
  std::vector<LayerSpec> layers;
  Shape input_shape;  // (channels, height, width)

  /// Output shape of every layer in order. Throws ShapeError naming the
  /// first layer whose input cannot be consumed.
  std::vector<Shape> infer_shapes() const;
  Shape output_shape() const;
  std::size_t output_size() const { return shape_size(output_shape()); }

  /// Plain-text form, one layer per line:
  ///   input channels=1 height=28 width=28
  ///   conv out=20 k=5 stride=1
  ///   maxpool window=2 stride=2
  ///   ip out=500
  ///   relu
  ///   flatten
  static NetworkSpec parse(std::string_view text);
  std::string to_text() const;
  static NetworkSpec load(const std::string& path);

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// Reference architectures.
NetworkSpec lenet_classifier(std::size_t classes = 10);
/// Convolutional LeNet trunk followed by a single inner product of
/// `embedding_dims` units.
NetworkSpec lenet_embedder(std::size_t embedding_dims);
/// Two stacked inner products with no activation in between.
NetworkSpec linear_embedder(Shape input_shape, std::size_t hidden = 20,
                            std::size_t out = 3);

struct LayerParams {
  Tensor weights;
  Tensor biases;
  friend bool operator==(const LayerParams&, const LayerParams&) = default;
};

/// One entry per spec layer; parameter-free layers hold empty tensors.
struct ParameterStore {
  std::vector<LayerParams> layers;

  void set_zero();
  bool all_finite() const;
  std::size_t parameter_count() const;
  /// Adds `scale * other` elementwise. Shapes must match.
  void add_scaled(const ParameterStore& other, double scale);
  void scale(double factor);

  std::vector<NamedTensor> to_named(const NetworkSpec& spec) const;
  static ParameterStore from_named(const NetworkSpec& spec,
                                   const std::vector<NamedTensor>& named);

  friend bool operator==(const ParameterStore&, const ParameterStore&) = default;
};

using GradientStore = ParameterStore;

/// Weights uniform in [-a, a], a = sqrt(6 / (fan_in + fan_out)); biases zero.
ParameterStore init_params(const NetworkSpec& spec, std::uint64_t seed);
ParameterStore zero_params(const NetworkSpec& spec);

/// Checks every parameter tensor against the shapes the spec implies.
void check_params(const NetworkSpec& spec, const ParameterStore& params);

struct ActivationTrace {
  Tensor input;
  std::vector<Tensor> outputs;  // one per layer
  const Tensor& output() const { return outputs.empty() ? input : outputs.back(); }
};

ActivationTrace forward(const NetworkSpec& spec, const ParameterStore& params,
                        const Tensor& input);

/// Network output only.
Tensor predict(const NetworkSpec& spec, const ParameterStore& params, const Tensor& input);

struct BackwardResult {
  GradientStore grads;
  Tensor input_grad;
};

BackwardResult backward(const NetworkSpec& spec, const ParameterStore& params,
                        const ActivationTrace& trace, const Tensor& output_grad);

/// Accumulates parameter gradients into `grads` (which must be shaped like
/// `params`). Returns the input gradient, or an empty tensor when
/// `want_input_grad` is false.
Tensor backward_accumulate(const NetworkSpec& spec, const ParameterStore& params,
                           const ActivationTrace& trace, const Tensor& output_grad,
                           GradientStore& grads, bool want_input_grad = true);

/// p <- p - lr * g for every parameter. Throws NumericError naming the layer
/// when a gradient is not finite.
void sgd_step(ParameterStore& params, const GradientStore& grads, double lr);

void save_checkpoint(const std::string& path, const NetworkSpec& spec,
                     const ParameterStore& params);
ParameterStore load_checkpoint(const std::string& path, const NetworkSpec& spec);

}  // namespace embk
