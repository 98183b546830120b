#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "embk/image.hpp"

namespace embk {

struct PointMeta {
  int label = 0;
  Distortion distortion;
  std::size_t source_id = 0;
  std::string split = "train";
  std::optional<NorbMeta> norb;
};

/// n points of `dims` coordinates each, row-major, with per-point metadata.
/// A point's id is its index.
struct Embedding {
  std::size_t dims = 0;
  std::vector<double> coords;
  std::vector<PointMeta> meta;

  std::size_t size() const { return meta.size(); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords).subspan(i * dims, dims);
  }
  std::span<double> point(std::size_t i) {
    return std::span<double>(coords).subspan(i * dims, dims);
  }
  /// Coordinates [first, first + count) of every point.
  Embedding sub_block(std::size_t first, std::size_t count) const;
  void append(const Embedding& other);
  void check() const;
};

std::vector<PointMeta> metadata_of(const std::vector<ImageSample>& samples,
                                   const std::string& split);

/// One JSON object per line:
/// {"id","coords","class","distortion":{"kind","params","intensity"},
///  "source_id","split"[,"norb"][,"thumb"]}
/// `images`, when given, adds base64 PNG thumbnails.
void write_embedding_jsonl(const std::string& path, const Embedding& emb,
                           const std::vector<Image>* images = nullptr);
std::string embedding_to_jsonl(const Embedding& emb, const std::vector<Image>* images = nullptr);
Embedding read_embedding_jsonl(const std::string& path);
Embedding parse_embedding_jsonl(const std::string& text);

// Thumbnail encoding.
std::string encode_png_gray(const Image& img);
std::string base64_encode(std::string_view bytes);

}  // namespace embk
