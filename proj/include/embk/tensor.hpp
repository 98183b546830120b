#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace embk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
std::string shape_to_string(const Shape& shape);

/// Dense row-major array of doubles.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> data);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  /// Same data, new shape with an equal element count.
  Tensor reshaped(Shape shape) const;
  void fill(double v);
  bool all_finite() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// A tensor with a name, the unit of the binary parameter format.
struct NamedTensor {
  std::string name;
  Tensor tensor;
};

/// Binary tensor container: magic "EMBK", u32 version, then records of
/// (u32 name length, name bytes, u32 rank, u32 extents..., little-endian f64 data)
/// until end of file.
inline constexpr std::uint32_t kTensorFileVersion = 1;

void write_tensors(std::ostream& out, std::span<const NamedTensor> tensors);
std::vector<NamedTensor> read_tensors(std::istream& in);

void save_tensors(const std::string& path, std::span<const NamedTensor> tensors);
std::vector<NamedTensor> load_tensors(const std::string& path);

}  // namespace embk
