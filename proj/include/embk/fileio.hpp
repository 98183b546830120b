#pragma once

#include <functional>
#include <iosfwd>
#include <string>

namespace embk {

/// Writes to `path + ".tmp"` and renames over `path` once `fill` returns.
void write_file_atomic(const std::string& path,
                       const std::function<void(std::ostream&)>& fill,
                       bool binary = false);

std::string read_file(const std::string& path, bool binary = false);

}  // namespace embk
