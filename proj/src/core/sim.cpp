/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/sim.hpp"

#include <algorithm>
#include <cmath>

#include "core/numeric.hpp"
#include "core/rng.hpp"

namespace planar_ar {

namespace {

constexpr long kMaxCells = 100000000;

void validate_boundary(const BoundaryData& bd) {
  if (bd.n_rows < 1 || bd.n_cols < 1)
    fail(ErrorCode::InvalidArgument, "grid must have at least one row and column");
  if (bd.n_rows * bd.n_cols > kMaxCells)
    fail(ErrorCode::InvalidArgument, "grid exceeds the cell limit");
  if (static_cast<long>(bd.first_axis.size()) != bd.n_rows - 1)
    fail(ErrorCode::InvalidArgument, "first_axis must hold n_rows-1 values");
  if (static_cast<long>(bd.second_axis.size()) != bd.n_cols - 1)
    fail(ErrorCode::InvalidArgument, "second_axis must hold n_cols-1 values");
  if (static_cast<long>(bd.forcing.size()) != (bd.n_rows - 1) * (bd.n_cols - 1))
    fail(ErrorCode::InvalidArgument, "forcing must hold (n_rows-1)*(n_cols-1) values");
}

// Fills one noise row; stream identity depends only on (seed, stream index),
// so generation order and threading never change the draw.
void fill_noise_row(double* out, long count, std::uint64_t seed, std::uint64_t stream,
                    NoiseKind kind, double sigma) {
  SplitMix64 rng = stream_rng(seed, stream);
  if (kind == NoiseKind::Gaussian) {
    long j = 0;
    while (j + 1 < count) {
      GaussianPair z = box_muller(rng);
      out[j++] = sigma * z.z0;
      out[j++] = sigma * z.z1;
    }
    if (j < count) out[j] = sigma * box_muller(rng).z0;
  } else {
    // variance-matched uniform draw on (-sqrt(3) sigma, sqrt(3) sigma)
    const double half_width = 1.7320508075688772 * sigma;
    for (long j = 0; j < count; ++j)
      out[j] = half_width * (2.0 * rng.uniform01() - 1.0);
  }
}

void flip_field(FieldGrid& g, AcfFlip flip) {
  if (flip == AcfFlip::None) return;
  const bool rev_rows = flip == AcfFlip::BothAxes || flip == AcfFlip::FirstAxis;
  const bool rev_cols = flip == AcfFlip::BothAxes || flip == AcfFlip::SecondAxis;
  const long R = g.n_rows(), C = g.n_cols();
  if (rev_rows)
    for (long i = 0; i < R / 2; ++i)
      for (long j = 0; j < C; ++j)
        std::swap(g.row(i)[j], g.row(R - 1 - i)[j]);
  if (rev_cols)
    for (long i = 0; i < R; ++i) std::reverse(g.row(i), g.row(i) + C);
}

}  // namespace

FieldGrid::FieldGrid(long n_rows, long n_cols, FieldProvenance provenance)
    : n_rows_(n_rows), n_cols_(n_cols), provenance_(provenance) {
  if (n_rows < 1 || n_cols < 1)
    fail(ErrorCode::InvalidArgument, "field must have at least one row and column");
  if (n_rows * n_cols > kMaxCells)
    fail(ErrorCode::InvalidArgument, "field exceeds the cell limit");
  values_.assign(static_cast<std::size_t>(n_rows) * n_cols, 0.0);
}

double FieldGrid::at(long i, long j) const {
  if (i < 0 || i >= n_rows_ || j < 0 || j >= n_cols_)
    fail(ErrorCode::Range, "cell index outside the field");
  return values_[static_cast<std::size_t>(i) * n_cols_ + j];
}

void FieldGrid::set(long i, long j, double v) {
  if (i < 0 || i >= n_rows_ || j < 0 || j >= n_cols_)
    fail(ErrorCode::Range, "cell index outside the field");
  values_[static_cast<std::size_t>(i) * n_cols_ + j] = v;
}

FieldGrid solve_deterministic(const ParamSet& p, const BoundaryData& bd) {
  validate(p);
  validate_boundary(bd);
  FieldGrid g(bd.n_rows, bd.n_cols, FieldProvenance::Deterministic);
  g.set(0, 0, bd.x00);
  for (long i = 1; i < bd.n_rows; ++i) g.row(i)[0] = bd.first_axis[i - 1];
  for (long j = 1; j < bd.n_cols; ++j) g.row(0)[j] = bd.second_axis[j - 1];
  const long fc = bd.n_cols - 1;
  for (long i = 1; i < bd.n_rows; ++i) {
    double* cur = g.row(i);
    const double* prev = g.row(i - 1);
    const double* v = fc > 0 ? &bd.forcing[static_cast<std::size_t>(i - 1) * fc] : nullptr;
    for (long j = 1; j < bd.n_cols; ++j)
      cur[j] = p.a * prev[j] + p.b * cur[j - 1] + p.c * prev[j - 1] + v[j - 1];
  }
  return g;
}

FieldGrid solve_explicit(const ParamSet& p, const BoundaryData& bd) {
  validate_boundary(bd);
  ConditionReport r = check_conditions(p);
  if (!r.causal)
    fail(ErrorCode::Noncausal, "solve_explicit requires causal parameters");

  PsiTable t = psi_table(p, bd.n_rows - 1, bd.n_cols - 1);
  auto edge1 = [&](long i) { return i == 0 ? bd.x00 : bd.first_axis[i - 1]; };
  auto edge2 = [&](long j) { return j == 0 ? bd.x00 : bd.second_axis[j - 1]; };
  const long fc = bd.n_cols - 1;
  auto forcing = [&](long i, long j) {
    return bd.forcing[static_cast<std::size_t>(i - 1) * fc + (j - 1)];
  };

  FieldGrid g(bd.n_rows, bd.n_cols, FieldProvenance::Deterministic);
  for (long i = 0; i < bd.n_rows; ++i) {
    for (long j = 0; j < bd.n_cols; ++j) {
      if (i == 0 || j == 0) {
        g.set(i, j, i == 0 ? edge2(j) : edge1(i));
        continue;
      }
      double x = t.at(i, j) * bd.x00;
      for (long k = 0; k < i; ++k)
        x += t.at(k, j) * (edge1(i - k) - p.a * edge1(i - k - 1));
      for (long l = 0; l < j; ++l)
        x += t.at(i, l) * (edge2(j - l) - p.b * edge2(j - l - 1));
      for (long k = 0; k < i; ++k)
        for (long l = 0; l < j; ++l) x += t.at(k, l) * forcing(i - k, j - l);
      g.set(i, j, x);
    }
  }
  return g;
}

FieldGrid simulate_stationary(const ParamSet& p, long n_rows, long n_cols,
                              std::uint64_t seed, const SimOptions& opts) {
  if (n_rows < 1 || n_cols < 1)
    fail(ErrorCode::InvalidArgument, "field must have at least one row and column");
  if (n_rows * n_cols > kMaxCells)
    fail(ErrorCode::InvalidArgument, "field exceeds the cell limit");
  if (!(opts.tol > 0.0))
    fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  ConditionReport rep = check_conditions(p);
  if (!rep.stationary)
    fail(ErrorCode::Nonstationary,
         "cannot simulate: parameters are nonstationary (D = " + fmt_double(rep.d) + ")");

  CanonicalCausal canon = canonical_causal(p);
  const ParamSet& q = canon.params;
  const double sigma = std::sqrt(q.sigma2);
  AxisCoefficients ax = axis_coefficients(q);
  const double decay = std::max(std::abs(ax.alpha), std::abs(ax.beta));

  SimMetadata meta;
  meta.params = p;
  meta.canonical = q;
  meta.transform_id = canon.transform_id;
  meta.flip = canon.flip;
  meta.seed = seed;
  meta.method = opts.method;
  meta.noise = opts.noise;
  meta.tol = opts.tol;
  meta.generator = kGeneratorId;

  FieldGrid out(n_rows, n_cols, opts.method == SimMethod::CausalMA
                                    ? FieldProvenance::CausalMA
                                    : FieldProvenance::BoundaryRecursion);

  if (opts.method == SimMethod::CausalMA) {
    // grow the kernel, heavier rim first, until the estimated tail mass is
    // below tolerance
    long K = 16, L = 16;
    PsiTable t = psi_table(q, K, L);
    while (t.tail_bound() > opts.tol) {
      if (K >= opts.max_kernel && L >= opts.max_kernel)
        fail(ErrorCode::Convergence,
             "MA kernel tail " + fmt_double(t.tail_bound()) + " still above tol " +
                 fmt_double(opts.tol) + " at the kernel cap; raise max_kernel or tol");
      double rim_k = 0.0, rim_l = 0.0;
      for (long l = 0; l <= L; ++l) rim_k += std::abs(t.at(K, l));
      for (long k = 0; k <= K; ++k) rim_l += std::abs(t.at(k, L));
      if (L >= opts.max_kernel || (rim_k >= rim_l && K < opts.max_kernel))
        K = std::min(K * 2, opts.max_kernel);
      else
        L = std::min(L * 2, opts.max_kernel);
      t = psi_table(q, K, L);
    }
    meta.kernel_rows = K;
    meta.kernel_cols = L;

    const long nr = n_rows + K, nc = n_cols + L;
    std::vector<double> noise(static_cast<std::size_t>(nr) * nc);
    run_blocks(static_cast<std::size_t>(nr), [&](std::size_t r) {
      fill_noise_row(&noise[r * nc], nc, seed, r, opts.noise, sigma);
    });

    // each output cell is an independent kernel contraction: embarrassingly
    // parallel and bit-stable for any thread count
    run_blocks(static_cast<std::size_t>(n_rows), [&](std::size_t blk) {
      const long i = static_cast<long>(blk);
      double* dst = out.row(i);
      for (long j = 0; j < n_cols; ++j) {
        double acc = 0.0;
        for (long k = 0; k <= K; ++k) {
          const double* psirow = &t.values()[static_cast<std::size_t>(k) * (L + 1)];
          const double* erow = &noise[static_cast<std::size_t>(i - k + K) * nc + (j + L)];
          double s = 0.0;
          for (long l = 0; l <= L; ++l) s += psirow[l] * erow[-l];
          acc += s;
        }
        dst[j] = acc;
      }
    });
  } else {
    long margin = 64;
    if (decay > 0.0) {
      double need = std::ceil(std::log(opts.tol) / std::log(decay));
      if (!(need <= static_cast<double>(opts.max_margin)))
        fail(ErrorCode::Convergence,
             "burn-in margin for decay " + fmt_double(decay) +
                 " exceeds max_margin; raise max_margin or tol");
      margin = std::max<long>(64, static_cast<long>(need));
    }
    meta.margin = margin;

    const long nr = margin + n_rows, nc = margin + n_cols;
    if ((nr + 1) * (nc + 1) > kMaxCells)
      fail(ErrorCode::InvalidArgument, "burn-in lattice exceeds the cell limit");
    BoundaryData bd;
    bd.n_rows = nr + 1;
    bd.n_cols = nc + 1;
    bd.first_axis.assign(nr, 0.0);
    bd.second_axis.assign(nc, 0.0);
    bd.forcing.resize(static_cast<std::size_t>(nr) * nc);
    run_blocks(static_cast<std::size_t>(nr), [&](std::size_t r) {
      fill_noise_row(&bd.forcing[r * nc], nc, seed, r, opts.noise, sigma);
    });
    FieldGrid full = solve_deterministic(q, bd);
    for (long i = 0; i < n_rows; ++i) {
      const double* src = full.row(margin + 1 + i) + margin + 1;
      std::copy(src, src + n_cols, out.row(i));
    }
  }

  flip_field(out, canon.flip);
  out.set_sim_metadata(meta);
  return out;
}

AcfGrid empirical_acf(const FieldGrid& g, long h1_max, long h2_max) {
  if (h1_max < 0 || h2_max < 0)
    fail(ErrorCode::InvalidArgument, "lag window bounds must be nonnegative");
  const long R = g.n_rows(), C = g.n_cols();
  if (h1_max >= R || h2_max >= C)
    fail(ErrorCode::Range, "lag window exceeds the field extent");

  const double n = static_cast<double>(R) * static_cast<double>(C);
  std::vector<double> row_sums(R);
  for (long i = 0; i < R; ++i)
    row_sums[i] = pairwise_sum(std::span<const double>(g.row(i), C));
  const double mean = pairwise_sum(row_sums) / n;

  AcfGrid out(-h1_max, h1_max, -h2_max, h2_max);
  std::vector<double> partial(R);
  for (long h1 = 0; h1 <= h1_max; ++h1) {
    for (long h2 = -h2_max; h2 <= h2_max; ++h2) {
      if (h1 == 0 && h2 < 0) continue;
      std::fill(partial.begin(), partial.end(), 0.0);
      const long j_lo = std::max(0L, h2), j_hi = C + std::min(0L, h2);
      for (long i = h1; i < R; ++i) {
        const double* cur = g.row(i);
        const double* lag = g.row(i - h1) - h2;
        double s = 0.0;
        for (long j = j_lo; j < j_hi; ++j) s += (cur[j] - mean) * (lag[j] - mean);
        partial[i] = s;
      }
      const double v = pairwise_sum(partial) / n;
      out.set(h1, h2, v);
      out.set(-h1, -h2, v);
    }
  }
  return out;
}

const char* to_string(FieldProvenance p) {
  switch (p) {
    case FieldProvenance::Deterministic:
      return "deterministic";
    case FieldProvenance::CausalMA:
      return "causal_ma";
    case FieldProvenance::BoundaryRecursion:
      return "boundary_recursion";
    case FieldProvenance::External:
      return "external";
  }
  return "?";
}

const char* to_string(SimMethod m) {
  return m == SimMethod::CausalMA ? "causal_ma" : "boundary_recursion";
}

const char* to_string(NoiseKind n) {
  return n == NoiseKind::Gaussian ? "gaussian" : "uniform";
}

}  // namespace planar_ar
