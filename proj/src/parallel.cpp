#include "btmf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace btmf {

unsigned thread_count() {
  if (const char* env = std::getenv("BTMF_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {
bool& in_parallel_region() {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

}  // namespace btmf
