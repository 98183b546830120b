#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "embk/image.hpp"
#include "embk/losses.hpp"

namespace embk {

struct PairRecord {
  std::size_t a = 0;
  std::size_t b = 0;
  PairLabel labels;
  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

/// neighbors[i]: the k nearest same-class originals of original i, nearest
/// first, ties broken by lower index.
struct NeighborTable {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> neighbors;

  /// True when j is in i's list or i is in j's list.
  bool related(std::size_t i, std::size_t j) const;
};

/// Exact same-class k-NN in pixel space (Euclidean).
NeighborTable knn_neighbors(const std::vector<ImageSample>& originals, std::size_t k = 5);

struct PairingOptions {
  std::uint64_t seed = 1;
  /// Number of sampled cross-neighborhood candidates per rule-generated
  /// similar pair.
  double dissimilar_ratio = 1.0;
};

/// One-label neighborhood pairing. Every variant of a source is similar to
/// every other variant of that source and to every variant of its k
/// neighbors; dissimilar pairs are sampled among pairs whose sources are not
/// neighbor-related. Unordered pairs are unique.
std::vector<PairRecord> make_drlim_pairs(const std::vector<ImageSample>& dataset,
                                         const NeighborTable& table, std::size_t n_variants,
                                         const PairingOptions& opts = {});

/// Two labels (neighborhood, transformation):
///   own variants              -> (1, 0)
///   neighbor, same distortion -> (1, 1)
///   non-neighbor (sampled)    -> (0, same distortion)
/// Neighbor pairs with different distortions are not generated.
std::vector<PairRecord> make_two_label_mnist_pairs(const std::vector<ImageSample>& dataset,
                                                   const NeighborTable& table,
                                                   std::size_t n_variants,
                                                   const PairingOptions& opts = {});

enum class NorbAdjacency {
  /// Y_az needs equal elevation, Y_el needs equal azimuth.
  kSingleAxis,
  /// Each label looks only at its own axis.
  kPerAxis,
};

bool azimuth_adjacent(int a, int b, int n_azimuth = kNorbAzimuths);
bool elevation_adjacent(int a, int b);

/// Two labels (azimuth, elevation) over every unordered pair of samples;
/// lighting is ignored. Returns all pairs, similar and dissimilar.
std::vector<PairRecord> make_norb_pairs(const std::vector<ImageSample>& dataset,
                                        NorbAdjacency rule = NorbAdjacency::kSingleAxis,
                                        int n_azimuth = kNorbAzimuths);

/// One label: similar when poses are contiguous along one axis.
std::vector<PairRecord> make_norb_drlim_pairs(const std::vector<ImageSample>& dataset,
                                              int n_azimuth = kNorbAzimuths);

bool is_similar(const PairRecord& p);

/// Keeps every pair with some Y_i = 1 and a seeded subset of the fully
/// dissimilar ones, `ratio` dissimilar per similar pair. Relative order is
/// preserved. Saturates (keeps all, warns) when the pool is too small.
std::vector<PairRecord> balance_pairs(const std::vector<PairRecord>& pairs, double ratio,
                                      std::uint64_t seed, bool* saturated = nullptr);

/// CSV with header `idx_a,idx_b,<label names>`.
void write_pairs_csv(const std::string& path, const std::vector<PairRecord>& pairs,
                     const std::vector<std::string>& label_names);

struct PairFile {
  std::vector<std::string> label_names;
  std::vector<PairRecord> pairs;
};
PairFile read_pairs_csv(const std::string& path);

}  // namespace embk
