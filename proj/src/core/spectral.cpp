/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "core/numeric.hpp"

namespace planar_ar {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_stationary(const ParamSet& p, const char* op) {
  ConditionReport r = check_conditions(p);
  if (!r.stationary)
    fail(ErrorCode::Nonstationary,
         std::string(op) + ": parameters are nonstationary (D = " + fmt_double(r.d) + ")");
}

void validate_spec(const QuadratureSpec& spec) {
  if (spec.nodes_per_axis < 16)
    fail(ErrorCode::InvalidArgument, "nodes_per_axis must be >= 16");
  if (spec.rule == QuadratureRule::Trapezoid && spec.nodes_per_axis % 2 != 0)
    fail(ErrorCode::InvalidArgument, "nodes_per_axis must be even for the trapezoid rule");
}

// Gauss-Legendre nodes/weights on [-1/2, 1/2] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -0.5 * x;
    nodes[n - 1 - i] = 0.5 * x;
    weights[i] = 0.5 * w;
    weights[n - 1 - i] = 0.5 * w;
  }
}

}  // namespace

DenomExpansion denominator_expansion(const ParamSet& p, double nu2) {
  const double c2 = std::cos(kTwoPi * nu2), s2 = std::sin(kTwoPi * nu2);
  DenomExpansion e;
  e.A = 1.0 + p.a * p.a + p.b * p.b + p.c * p.c + 2.0 * (p.a * p.c - p.b) * c2;
  e.B = 2.0 * ((p.b * p.c - p.a) + (p.a * p.b - p.c) * c2);
  e.C = 2.0 * (p.a * p.b + p.c) * s2;
  return e;
}

double density_at(const ParamSet& p, double nu1, double nu2) {
  require_stationary(p, "density_at");
  DenomExpansion e = denominator_expansion(p, nu2);
  double g = e.A + e.B * std::cos(kTwoPi * nu1) + e.C * std::sin(kTwoPi * nu1);
  if (!(g > 0.0))
    fail(ErrorCode::Internal, "spectral denominator not positive at a stationary point");
  return p.sigma2 / g;
}

AcfQuadratureOracle::AcfQuadratureOracle(const ParamSet& p, QuadratureSpec spec)
    : spec_(spec) {
  require_stationary(p, "acf_quadrature");
  validate_spec(spec_);
  const int n = spec_.nodes_per_axis;

  std::vector<double> w;
  if (spec_.rule == QuadratureRule::Trapezoid) {
    // uniform nodes on the periodic square; the trapezoid rule collapses to
    // equal weights 1/n
    nodes_.resize(n);
    w.assign(n, 1.0 / n);
    for (int i = 0; i < n; ++i) nodes_[i] = -0.5 + static_cast<double>(i) / n;
  } else {
    gauss_legendre(n, nodes_, w);
  }

  weighted_density_.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    DenomExpansion e = denominator_expansion(p, nodes_[j]);
    for (int i = 0; i < n; ++i) {
      double g = e.A + e.B * std::cos(kTwoPi * nodes_[i]) + e.C * std::sin(kTwoPi * nodes_[i]);
      weighted_density_[static_cast<std::size_t>(i) * n + j] = p.sigma2 / g * w[i] * w[j];
    }
  }
}

double AcfQuadratureOracle::value(long h1, long h2) const {
  // The integrand is even in (nu1, nu2) jointly, so gamma(h) = gamma(-h);
  // canonicalizing the lag makes the identity exact in floating point.
  if (h1 < 0 || (h1 == 0 && h2 < 0)) {
    h1 = -h1;
    h2 = -h2;
  }
  const int n = spec_.nodes_per_axis;
  std::vector<double> c1(n), s1(n), c2(n), s2(n);
  for (int i = 0; i < n; ++i) {
    c1[i] = std::cos(kTwoPi * h1 * nodes_[i]);
    s1[i] = std::sin(kTwoPi * h1 * nodes_[i]);
    c2[i] = std::cos(kTwoPi * h2 * nodes_[i]);
    s2[i] = std::sin(kTwoPi * h2 * nodes_[i]);
  }

  // cos(2 pi (h1 nu1 + h2 nu2)) = c1 c2 - s1 s2; contract rows first.
  // Fixed 64-block split over rows keeps the reduction tree independent of
  // the thread count.
  const std::size_t n_blocks = 64;
  std::vector<double> U(static_cast<std::size_t>(n), 0.0), V(static_cast<std::size_t>(n), 0.0);
  std::vector<std::vector<double>> bu(n_blocks), bv(n_blocks);
  run_blocks(n_blocks, [&](std::size_t blk) {
    const int lo = static_cast<int>(blk * n / n_blocks);
    const int hi = static_cast<int>((blk + 1) * n / n_blocks);
    auto& u = bu[blk];
    auto& v = bv[blk];
    u.assign(n, 0.0);
    v.assign(n, 0.0);
    for (int i = lo; i < hi; ++i) {
      const double ci = c1[i], si = s1[i];
      const double* row = &weighted_density_[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) {
        u[j] += ci * row[j];
        v[j] += si * row[j];
      }
    }
  });
  for (std::size_t blk = 0; blk < n_blocks; ++blk)
    for (int j = 0; j < n; ++j) {
      U[j] += bu[blk][j];
      V[j] += bv[blk][j];
    }

  std::vector<double> col(n);
  for (int j = 0; j < n; ++j) col[j] = c2[j] * U[j] - s2[j] * V[j];
  return pairwise_sum(col);
}

double acf_quadrature(const ParamSet& p, long h1, long h2, QuadratureSpec spec) {
  return AcfQuadratureOracle(p, spec).value(h1, h2);
}

QuadratureEstimate acf_quadrature_auto(const ParamSet& p, long h1, long h2,
                                       double tol, int max_nodes) {
  QuadratureSpec spec;
  double prev = acf_quadrature(p, h1, h2, spec);
  double err = std::abs(prev);
  while (spec.nodes_per_axis * 2 <= max_nodes) {
    spec.nodes_per_axis *= 2;
    double cur = acf_quadrature(p, h1, h2, spec);
    err = std::abs(cur - prev);
    prev = cur;
    if (err < tol) return {cur, err, spec.nodes_per_axis, true};
  }
  return {prev, err, spec.nodes_per_axis, false};
}

double integral_poisson(double A, double B, double C) {
  if (!(A > 0.0) || !(A * A > B * B + C * C))
    fail(ErrorCode::Domain, "integral_poisson requires A > 0 and A^2 > B^2 + C^2");
  return 1.0 / std::sqrt(A * A - B * B - C * C);
}

double integral_ar1_kernel(double A, double B, long n) {
  if (!(A > std::abs(B)))
    fail(ErrorCode::Domain, "integral_ar1_kernel requires A > |B|");
  const double root = std::sqrt(A * A - B * B);
  const double alpha = -B / (A + root);
  return ipow(alpha, std::labs(n)) / root;
}

std::complex<double> integral_unit_circle(std::complex<double> A,
                                          std::complex<double> B, long n) {
  const double ma = std::abs(A), mb = std::abs(B);
  if (ma == mb) fail(ErrorCode::Domain, "integral_unit_circle requires |A| != |B|");
  auto cpow = [](std::complex<double> z, long k) {
    std::complex<double> r{1.0, 0.0};
    if (k >= 0)
      for (long i = 0; i < k; ++i) r *= z;
    else
      for (long i = 0; i < -k; ++i) r /= z;
    return r;
  };
  if (n <= 0) {
    if (ma > mb) return cpow(A, n - 1) * cpow(B, -n);
    return {0.0, 0.0};
  }
  if (ma > mb) return {0.0, 0.0};
  return -cpow(A, n - 1) * cpow(B, -n);
}

double integral_binomial(const ParamSet& p, int n1, int n2) {
  if (n1 < 0 || n2 < 0)
    fail(ErrorCode::InvalidArgument, "integral_binomial requires nonnegative orders");
  ConditionReport r = check_conditions(p);
  if (!r.causal)
    fail(ErrorCode::Noncausal, "integral_binomial requires causal parameters");
  const double s = p.a * p.b + p.c;
  double sum = 0.0;
  for (int k = 0; k <= std::min(n1, n2); ++k) {
    double binom = 1.0;
    for (int i = 1; i <= k; ++i)
      binom *= static_cast<double>(n1 - k + i) / i * (n2 - k + i) / i;
    sum += binom * ipow(p.a, n1 - k) * ipow(p.b, n2 - k) * ipow(s, k);
  }
  return sum;
}

const char* to_string(QuadratureRule r) {
  return r == QuadratureRule::Trapezoid ? "trapezoid" : "gauss_legendre";
}

}  // namespace planar_ar
