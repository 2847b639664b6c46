/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/ma.hpp"

#include <algorithm>
#include <cmath>

#include "core/acf.hpp"
#include "core/numeric.hpp"

namespace planar_ar {

namespace {

constexpr long kMaxTable = 100000000;

void require_causal(const ParamSet& p, const char* op) {
  ConditionReport r = check_conditions(p);
  if (!r.causal)
    fail(ErrorCode::Noncausal, std::string(op) + " requires causal parameters");
}

// C(n, k) * base^k evaluated as prod_{i=1..k} (n-k+i)/i * base to dodge
// overflow of the raw binomial.
double binom_pow(long n, long k, double base) {
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i * base;
  return r;
}

// Compensated double-double arithmetic for the alternating binomial sum.
// Individual summands can dwarf the result by ten or more orders of
// magnitude, so plain doubles lose the low digits the contract needs.
struct DD {
  double hi, lo;
};

DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(DD x, DD y) {
  DD s = two_sum(x.hi, y.hi);
  return quick_two_sum(s.hi, s.lo + x.lo + y.lo);
}

DD dd_mul_d(DD x, double y) {
  DD p = two_prod(x.hi, y);
  return quick_two_sum(p.hi, p.lo + x.lo * y);
}

DD dd_div_d(DD x, double y) {
  double q1 = x.hi / y;
  DD p = two_prod(q1, y);
  double r = ((x.hi - p.hi) - p.lo) + x.lo;
  return quick_two_sum(q1, r / y);
}

// l1 mass of the coefficients outside [0..kmax]x[0..lmax]: extend the
// recurrence over enlarging squares (exact summation, two-row buffer) until
// the open-ended remainder closes under a geometric ratio. The closure ratio
// is floored by the axis decay rate and doubled for slack; the marched part
// is exact, so the estimate tracks the true mass closely. Returns infinity
// when no contraction is reached within the budget.
double tail_estimate(const ParamSet& p, long kmax, long lmax, double axis_ratio) {
  constexpr double kRhoCap = 0.995;
  constexpr long kCellCap = 64000000;
  for (long ext = 64;; ext *= 2) {
    const long K2 = kmax + ext, L2 = lmax + ext;
    if ((K2 + 1) * (L2 + 1) > kCellCap) return INFINITY;

    std::vector<double> prev(L2 + 1, 0.0), cur(L2 + 1, 0.0);
    double inside = 0.0, total = 0.0, rim_last = 0.0, rim_prev = 0.0;
    for (long k = 0; k <= K2; ++k) {
      if (k == 0) {
        cur[0] = 1.0;
        for (long l = 1; l <= L2; ++l) cur[l] = p.b * cur[l - 1];
      } else {
        cur[0] = p.a * prev[0];
        for (long l = 1; l <= L2; ++l)
          cur[l] = p.a * prev[l] + p.b * cur[l - 1] + p.c * prev[l - 1];
      }
      for (long l = 0; l <= L2; ++l) {
        const double m = std::abs(cur[l]);
        total += m;
        if (k <= kmax && l <= lmax) inside += m;
        if (k == K2 || l == L2) rim_last += m;
        if ((k == K2 - 1 || l == L2 - 1) && k <= K2 - 1 && l <= L2 - 1) rim_prev += m;
      }
      std::swap(prev, cur);
    }

    const double marched = total - inside;
    if (rim_last == 0.0) return marched;
    const double rho = std::max(rim_prev > 0.0 ? rim_last / rim_prev : 0.0, axis_ratio);
    if (rho < kRhoCap) {
      const double closure = rim_last * rho / (1.0 - rho);
      // march until the open-ended part is negligible; the doubling then
      // absorbs any drift of the rim ratios beyond the measured one
      if (closure <= 1e-6 * (marched + closure)) return marched + 2.0 * closure;
    }
  }
}

}  // namespace

double psi(const ParamSet& p, long k, long l) {
  if (k < 0 || l < 0) return 0.0;
  const double s = p.a * p.b + p.c;

  if (p.a == 0.0 && p.b == 0.0) {
    // only the m = k = l term survives
    return k == l ? ipow(p.c, k) : 0.0;
  }
  if (p.a == 0.0) {
    // a^(k-m) kills every term except m = k
    return k <= l ? binom_pow(l, k, s) * ipow(p.b, l - k) : 0.0;
  }
  if (p.b == 0.0) {
    return l <= k ? binom_pow(k, l, s) * ipow(p.a, k - l) : 0.0;
  }

  DD term{1.0, 0.0};
  for (long i = 0; i < k; ++i) term = dd_mul_d(term, p.a);
  for (long i = 0; i < l; ++i) term = dd_mul_d(term, p.b);
  DD sum = term;
  const long mmax = std::min(k, l);
  for (long m = 0; m < mmax; ++m) {
    term = dd_mul_d(term, static_cast<double>(k - m) * static_cast<double>(l - m));
    term = dd_div_d(term, static_cast<double>(m + 1) * static_cast<double>(m + 1));
    term = dd_mul_d(term, s);
    term = dd_div_d(term, p.a * p.b);
    if (term.hi == 0.0) break;
    sum = dd_add(sum, term);
  }
  return sum.hi + sum.lo;
}

PsiTable psi_table(const ParamSet& p, long kmax, long lmax) {
  if (kmax < 0 || lmax < 0)
    fail(ErrorCode::InvalidArgument, "psi_table bounds must be nonnegative");
  if ((kmax + 1) * (lmax + 1) > kMaxTable)
    fail(ErrorCode::InvalidArgument, "psi_table exceeds the cell limit");
  require_causal(p, "psi_table");

  PsiTable t;
  t.kmax_ = kmax;
  t.lmax_ = lmax;
  const long n2 = lmax + 1;
  t.values_.assign(static_cast<std::size_t>(kmax + 1) * n2, 0.0);
  t.values_[0] = 1.0;
  for (long l = 1; l <= lmax; ++l) t.values_[l] = p.b * t.values_[l - 1];
  for (long k = 1; k <= kmax; ++k) {
    double* row = &t.values_[static_cast<std::size_t>(k) * n2];
    const double* prev = &t.values_[static_cast<std::size_t>(k - 1) * n2];
    row[0] = p.a * prev[0];
    for (long l = 1; l <= lmax; ++l)
      row[l] = p.a * prev[l] + p.b * row[l - 1] + p.c * prev[l - 1];
  }

  AxisCoefficients ax = axis_coefficients(p);
  t.tail_bound_ = tail_estimate(p, kmax, lmax,
                                std::max(std::abs(ax.alpha), std::abs(ax.beta)));
  return t;
}

double cross_covariance(const ParamSet& p, long h1, long h2) {
  require_causal(p, "cross_covariance");
  if (h1 < 0 || h2 < 0) return 0.0;
  return psi(p, h1, h2) * p.sigma2;
}

}  // namespace planar_ar
