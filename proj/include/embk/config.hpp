#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace embk {

/// Flat `key = value` run configuration. '#' starts a comment. Only keys
/// from the known set are accepted; unset keys fall back to their defaults.
class RunConfig {
 public:
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  /// Overrides a value; the key must be known.
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  /// Throws ConfigError naming the key when it has neither value nor default.
  std::string str(const std::string& key) const;
  double real(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::size_t count(const std::string& key) const;
  std::uint64_t seed() const;
  std::vector<double> reals(const std::string& key) const;
  std::vector<std::int64_t> integers(const std::string& key) const;
  /// The value must name an existing file or directory.
  std::string existing_path(const std::string& key) const;

  void require(const std::vector<std::string>& keys) const;

  static const std::map<std::string, std::string>& defaults();
  static bool is_known(const std::string& key);

  /// Directory of the loaded file, used to resolve relative paths.
  std::string base_dir;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace embk
