/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <vector>

#include "core/params.hpp"

namespace planar_ar {

/// Moving-average coefficient psi[k][l] of the causal representation,
///   psi = sum_{m<=min(k,l)} C(k,m) C(l,m) a^(k-m) b^(l-m) (ab+c)^m,
/// evaluated with multiplicative summand updates (no binomials are ever
/// materialized). Returns 0 for k < 0 or l < 0. The polynomial is defined for
/// every (a,b,c); only its MA interpretation needs causality.
double psi(const ParamSet& p, long k, long l);

/// Dense table of psi on [0..kmax] x [0..lmax] filled by the defining
/// recurrence, plus an estimated l1 mass outside the table.
class PsiTable {
 public:
  long kmax() const { return kmax_; }
  long lmax() const { return lmax_; }
  /// Reads 0 outside the table.
  double at(long k, long l) const {
    if (k < 0 || l < 0 || k > kmax_ || l > lmax_) return 0.0;
    return values_[static_cast<std::size_t>(k) * (lmax_ + 1) + l];
  }
  /// Estimated (geometric extrapolation, not a proven bound) l1 mass of the
  /// coefficients outside the table.
  double tail_bound() const { return tail_bound_; }
  std::span<const double> values() const { return values_; }

 private:
  friend PsiTable psi_table(const ParamSet&, long, long);
  long kmax_ = 0, lmax_ = 0;
  double tail_bound_ = 0.0;
  std::vector<double> values_;
};

/// Requires causal parameters (the tail estimate is meaningless otherwise).
PsiTable psi_table(const ParamSet& p, long kmax, long lmax);

/// cov(X[i+h1][j+h2], eps[i][j]) = psi(h1, h2) * sigma2 for h1, h2 >= 0 and
/// zero when either lag is negative. Requires causal parameters.
double cross_covariance(const ParamSet& p, long h1, long h2);

}  // namespace planar_ar
