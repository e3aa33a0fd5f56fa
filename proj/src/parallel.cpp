#include "mcuforge/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mcuforge {

int worker_count() {
  if (const char* env = std::getenv("MCU_FORGE_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (total == 0) return;
  std::size_t workers = std::min<std::size_t>(worker_count(), total);
  if (workers <= 1) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    std::size_t end = std::min(total, begin + chunk);
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

}  // namespace mcuforge
