#include "cic/quadrature.hpp"

#include <map>
#include <mutex>

namespace cic {

const GaussRule& gauss_rule(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, make_gauss_rule(n)).first;
  }
  return it->second;
}

}  // namespace cic
