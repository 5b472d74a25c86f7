#include "k3ml/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace k3ml {

namespace {

unsigned initial_threads() {
  if (const char* env = std::getenv("K3ML_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<unsigned>& threads_slot() {
  static std::atomic<unsigned> slot{initial_threads()};
  return slot;
}

}  // namespace

unsigned default_threads() { return threads_slot().load(); }

void set_default_threads(unsigned n) { threads_slot().store(n == 0 ? 1 : n); }

}  // namespace k3ml
