#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace k3ml {

// Worker count used when a call site passes 0. Initialized from K3ML_THREADS,
// else std::thread::hardware_concurrency().
unsigned default_threads();
void set_default_threads(unsigned n);

// Runs body(i) for i in [0, n) on up to `threads` workers with an interleaved
// static partition. Callers write results into per-index slots and reduce them
// in index order, so the outcome never depends on the worker count.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (threads == 0) threads = default_threads();
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double ordered_sum(const std::vector<double>& parts) {
  CompensatedSum s;
  for (double x : parts) s.add(x);
  return s.value();
}

}  // namespace k3ml
