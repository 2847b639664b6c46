/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

namespace planar_ar {

/// Integer power by repeated multiplication; ipow(x, 0) == 1 for every x.
double ipow(double base, long exp);

/// Cascade (pairwise) summation. The reduction tree depends only on the data
/// layout, never on threading, so results are bit-stable.
double pairwise_sum(std::span<const double> xs);

/// Thread cap honoured by the internally parallel loops. Reads the
/// PLANAR_AR_THREADS environment variable once; unset or invalid values fall
/// back to the hardware concurrency.
int max_threads();

/// Runs fn(block) for block = 0 .. n_blocks-1, possibly across threads.
/// Block decomposition is fixed by the caller, so per-block results are
/// identical for any thread count.
void run_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

/// Shortest decimal representation that round-trips to the same double.
std::string fmt_double(double v);

}  // namespace planar_ar
