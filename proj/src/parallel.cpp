#include "fbt/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace fbt {
namespace {

std::size_t default_workers() {
  if (const char* env = std::getenv("FBT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

std::atomic<std::size_t>& workers() {
  static std::atomic<std::size_t> w{default_workers()};
  return w;
}

}  // namespace

std::size_t worker_count() { return workers().load(); }
void set_worker_count(std::size_t n) { workers().store(n == 0 ? default_workers() : n); }

}  // namespace fbt
