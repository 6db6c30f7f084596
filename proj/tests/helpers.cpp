#include "helpers.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <unistd.h>

namespace cic::testing {

std::string temp_path(const std::string& stem) {
  static std::atomic<int> counter{0};
  const int id = counter.fetch_add(1);
  char name[256];
  std::snprintf(name, sizeof(name), "cic_test_%d_%d_%s", static_cast<int>(::getpid()), id,
                stem.c_str());
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace cic::testing
