/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/acf.hpp"
#include "core/ma.hpp"

namespace planar_ar {

enum class FieldProvenance { Deterministic, CausalMA, BoundaryRecursion, External };
enum class SimMethod { CausalMA, BoundaryRecursion };
enum class NoiseKind { Gaussian, Uniform };

/// Everything needed to reproduce a stochastic field byte-for-byte.
struct SimMetadata {
  ParamSet params;       ///< as requested by the caller
  ParamSet canonical;    ///< causal parameterization actually driven
  int transform_id = 1;
  AcfFlip flip = AcfFlip::None;
  std::uint64_t seed = 0;
  SimMethod method = SimMethod::BoundaryRecursion;
  NoiseKind noise = NoiseKind::Gaussian;
  double tol = 1e-8;
  long kernel_rows = 0;  ///< CausalMA: kmax of the truncated kernel
  long kernel_cols = 0;  ///< CausalMA: lmax of the truncated kernel
  long margin = 0;       ///< BoundaryRecursion: burn-in margin
  const char* generator = "";
};

/// Realized field values on a finite lattice, row-major with the first index
/// as the row.
class FieldGrid {
 public:
  FieldGrid(long n_rows, long n_cols, FieldProvenance provenance);

  long n_rows() const { return n_rows_; }
  long n_cols() const { return n_cols_; }
  FieldProvenance provenance() const { return provenance_; }
  const std::optional<SimMetadata>& sim_metadata() const { return meta_; }
  void set_sim_metadata(const SimMetadata& m) { meta_ = m; }

  double at(long i, long j) const;
  void set(long i, long j, double v);
  double* row(long i) { return &values_[static_cast<std::size_t>(i) * n_cols_]; }
  const double* row(long i) const { return &values_[static_cast<std::size_t>(i) * n_cols_]; }
  std::span<const double> values() const { return values_; }

 private:
  long n_rows_, n_cols_;
  FieldProvenance provenance_;
  std::optional<SimMetadata> meta_;
  std::vector<double> values_;
};

/// Preset values on the quadrant edge plus the interior forcing.
struct BoundaryData {
  long n_rows = 0;
  long n_cols = 0;
  double x00 = 0.0;
  std::vector<double> first_axis;   ///< x[i][0] for i = 1 .. n_rows-1
  std::vector<double> second_axis;  ///< x[0][j] for j = 1 .. n_cols-1
  std::vector<double> forcing;      ///< v[i][j], i,j >= 1, (n_rows-1) x (n_cols-1) row-major
};

/// Direct wavefront solve of
///   x[i][j] = a x[i-1][j] + b x[i][j-1] + c x[i-1][j-1] + v[i][j]
/// from the given edge data. Well-defined for every parameter set.
FieldGrid solve_deterministic(const ParamSet& p, const BoundaryData& bd);

/// Same solution assembled from the explicit MA-coefficient formula; requires
/// causal parameters and must agree with solve_deterministic to roundoff.
FieldGrid solve_explicit(const ParamSet& p, const BoundaryData& bd);

struct SimOptions {
  SimMethod method = SimMethod::BoundaryRecursion;
  NoiseKind noise = NoiseKind::Gaussian;
  double tol = 1e-8;       ///< kernel tail / burn-in decay target
  long max_kernel = 4096;  ///< per-axis cap for the truncated MA kernel
  long max_margin = 32768; ///< cap for the burn-in margin
};

/// Seeded draw from the stationary field. Non-causal stationary parameters
/// are canonicalized and the output flipped, so the sample ACF matches the
/// requested parameterization. Deterministic for fixed (seed, method, opts)
/// regardless of the thread count.
FieldGrid simulate_stationary(const ParamSet& p, long n_rows, long n_cols,
                              std::uint64_t seed, const SimOptions& opts = {});

/// Biased sample autocovariance (normalized by the total cell count) over the
/// window [-h1_max..h1_max] x [-h2_max..h2_max]; even symmetry holds by
/// construction.
AcfGrid empirical_acf(const FieldGrid& g, long h1_max, long h2_max);

const char* to_string(FieldProvenance p);
const char* to_string(SimMethod m);
const char* to_string(NoiseKind n);

}  // namespace planar_ar
