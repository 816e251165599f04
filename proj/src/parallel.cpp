#include "compreco/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace compreco {

unsigned configured_threads() {
  if (const char* env = std::getenv("COMPRECO_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace compreco
