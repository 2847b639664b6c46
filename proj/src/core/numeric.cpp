/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/numeric.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <thread>
#include <vector>

namespace planar_ar {

double ipow(double base, long exp) {
  if (exp < 0) return 1.0 / ipow(base, -exp);
  double r = 1.0;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 32) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

int max_threads() {
  static const int cached = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("PLANAR_AR_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, 1024));
    }
    return hw;
  }();
  return cached;
}

void run_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
  const int threads = std::min<std::size_t>(max_threads(), n_blocks);
  if (threads <= 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t b = next.fetch_add(1);
        if (b >= n_blocks) break;
        fn(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::string fmt_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace planar_ar
