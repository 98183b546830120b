#pragma once

#include <string>
#include <vector>

#include "embk/image.hpp"
#include "json.hpp"

namespace embk {

/// {"kind": "...", "params": {...}, "intensity": x}
nlohmann::json distortion_to_json(const Distortion& d);
Distortion distortion_from_json(const nlohmann::json& j);

nlohmann::json norb_meta_to_json(const NorbMeta& m);
NorbMeta norb_meta_from_json(const nlohmann::json& j);

/// Directory with `samples.bin` (one tensor "samples" of shape (N, H, W))
/// and `meta.jsonl` (one object per sample: id, class, distortion,
/// source_id, optional norb).
void save_dataset(const std::string& dir, const std::vector<ImageSample>& samples);
std::vector<ImageSample> load_dataset(const std::string& dir);

}  // namespace embk
