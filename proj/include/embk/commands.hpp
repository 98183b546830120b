#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "embk/config.hpp"
#include "embk/image.hpp"

namespace embk {

struct CommandOptions {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> checkpoint;
  bool thumbs = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Output layout under out_dir.
namespace layout {
inline constexpr const char* kTrainDir = "train";
inline constexpr const char* kTestDir = "test";
inline constexpr const char* kTrainPairs = "pairs_train.csv";
inline constexpr const char* kTestPairs = "pairs_test.csv";
inline constexpr const char* kCheckpoint = "model.embk";
inline constexpr const char* kHistory = "loss_history.csv";
inline constexpr const char* kEmbedding = "embedding.jsonl";
inline constexpr const char* kTsne = "tsne.jsonl";
inline constexpr const char* kTsneKl = "tsne_kl.csv";
inline constexpr const char* kEval = "eval.jsonl";
inline constexpr const char* kBundle = "bundle.jsonl";
}  // namespace layout

/// "none", "classification", "inspection" or "translate_x:<shift>,<shift>,...".
std::vector<Distortion> parse_distortion_grid(const std::string& text);

void cmd_augment(const RunConfig& cfg, std::ostream& log);
void cmd_pair(const RunConfig& cfg, std::ostream& log);
void cmd_train(const RunConfig& cfg, const CommandOptions& opts, std::ostream& log);
void cmd_embed(const RunConfig& cfg, const CommandOptions& opts, std::ostream& log);
void cmd_tsne(const RunConfig& cfg, std::ostream& log);
void cmd_eval(const RunConfig& cfg, std::ostream& log);
void cmd_export(const RunConfig& cfg, const CommandOptions& opts, std::ostream& log);

/// Loads the config, applies overrides, runs `command` and maps errors to
/// exit codes (1 validation, 2 runtime). Messages go to `err`.
int run_command(const std::string& command, const CommandOptions& opts, std::ostream& log,
                std::ostream& err);

const std::vector<std::string>& command_names();

}  // namespace embk
