#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embk/tensor.hpp"

namespace embk {

/// Grayscale image, row-major, values in [0, 1]. Background is 0.
struct Image {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> pixels;

  Image() = default;
  Image(std::size_t h, std::size_t w, double fill = 0.0)
      : height(h), width(w), pixels(h * w, fill) {}

  double& at(std::size_t y, std::size_t x) { return pixels[y * width + x]; }
  double at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }
  /// Zero outside the image.
  double sample(long y, long x) const;
  double sum() const;

  Tensor to_tensor() const;  // shape (1, height, width)

  friend bool operator==(const Image&, const Image&) = default;
};

enum class DistortionKind { kNone, kTranslate, kRotate, kShear, kBlur };

std::string to_string(DistortionKind kind);
DistortionKind distortion_kind_from_string(const std::string& name);

/// The distortion applied to a sample. `intensity` is the kind's signed
/// scalar magnitude: dx (or dy for vertical-only shifts), angle in degrees,
/// shear offset in pixels, blur radius in pixels.
struct Distortion {
  DistortionKind kind = DistortionKind::kNone;
  int dx = 0;
  int dy = 0;
  double angle = 0.0;
  double offset = 0.0;
  int radius = 0;

  static Distortion none() { return {}; }
  static Distortion translate(int dx, int dy);
  static Distortion rotate(double degrees);
  static Distortion shear(double offset);
  static Distortion blur(int radius);

  double intensity() const;

  friend bool operator==(const Distortion&, const Distortion&) = default;
};

// Distortions. All map [0,1] images to [0,1] images.

/// Integer shift; vacated pixels become 0.
Image translate(const Image& img, int dx, int dy);
/// Rotation about the image center with bilinear interpolation; positive
/// angles turn the content counter-clockwise as displayed (y down).
Image rotate(const Image& img, double degrees);
/// Row y moves right by offset * (y - c) / c, c = (height - 1) / 2.
Image shear(const Image& img, double offset);
/// (2r+1)^2 box average with zero padding.
Image blur(const Image& img, int radius);

Image apply(const Image& img, const Distortion& d);

/// Block-average downsampling by an integer factor.
Image downsample(const Image& img, std::size_t factor);

/// NORB viewpoint metadata. Azimuth is an index in 0..17 (20 degree steps).
struct NorbMeta {
  int category = 0;
  int instance = 0;
  int elevation = 0;
  int azimuth = 0;
  int lighting = 0;
  friend bool operator==(const NorbMeta&, const NorbMeta&) = default;
};

inline constexpr int kNorbAzimuths = 18;
inline constexpr int kNorbElevations = 9;
inline constexpr int kNorbLightings = 6;
inline constexpr int kNorbAirplane = 2;

struct ImageSample {
  Image image;
  int label = 0;
  Distortion distortion;
  std::size_t source_id = 0;
  std::optional<NorbMeta> norb;
};

/// For every sample: the original (distortion none) followed by one copy per
/// grid entry, in grid order. source_id is the sample's input index.
std::vector<ImageSample> augment(const std::vector<ImageSample>& samples,
                                 const std::vector<Distortion>& grid);

/// x-translations only.
std::vector<Distortion> translation_grid_x(const std::vector<int>& shifts);
/// x in {-5..5}\{0} and y in {-10..10}\{0}: 30 translations.
std::vector<Distortion> classification_translation_grid();
/// Grid for the visual inspection set: translations, rotations, shears, blurs.
std::vector<Distortion> inspection_grid();

std::vector<Tensor> to_tensors(const std::vector<ImageSample>& samples);

// Dataset ingestion.

/// IDX (big-endian) image and label files; bytes scaled by 1/255.
std::vector<ImageSample> load_mnist_idx(const std::string& images_path,
                                        const std::string& labels_path);
void write_idx_images(const std::string& path, const std::vector<Image>& images);
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

inline constexpr std::uint32_t kNorbByteMatrix = 0x1E3D4C55;
inline constexpr std::uint32_t kNorbIntMatrix = 0x1E3D4C54;

struct NorbMatrix {
  std::uint32_t magic = 0;
  std::vector<std::uint32_t> dims;
  std::vector<std::uint8_t> bytes;     // byte matrices
  std::vector<std::int32_t> integers;  // integer matrices
};

NorbMatrix read_norb_matrix(const std::string& path);
void write_norb_matrix(const std::string& path, const NorbMatrix& m);

/// Left-camera images from a NORB "-dat" file with "-cat" and "-info"
/// metadata. `downsample_factor` 3 turns 96x96 into 32x32.
std::vector<ImageSample> load_norb(const std::string& dat_path, const std::string& cat_path,
                                   const std::string& info_path,
                                   std::size_t downsample_factor = 1);

std::vector<ImageSample> filter_norb(const std::vector<ImageSample>& samples, int category,
                                     int instance);

struct RotatingShapeOptions {
  int n_azimuth = kNorbAzimuths;
  int n_elevation = kNorbElevations;
  std::vector<double> lightings = {1.0, 0.93, 0.86, 0.79, 0.72, 0.65};
  std::size_t size = 32;
};

/// Renders an asymmetric "L" glyph at every (azimuth, elevation, lighting):
/// in-plane rotation by 360*az/n_azimuth degrees, vertical squash for
/// elevation, brightness multiplier for lighting.
std::vector<ImageSample> synth_rotating_shape(const RotatingShapeOptions& opts,
                                              std::uint64_t seed = 0);
Image render_rotating_shape(int azimuth, int elevation, double lighting,
                            const RotatingShapeOptions& opts);

}  // namespace embk
