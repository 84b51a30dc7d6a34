#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace testpaths {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(COGEN_FIXTURE_DIR) / name;
}

inline std::filesystem::path data(const std::string& name) {
  return std::filesystem::path(COGEN_DATA_DIR) / name;
}

// Fresh directory under the system temp dir, removed by the caller if wanted.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("cogen-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testpaths
