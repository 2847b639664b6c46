/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/acf.hpp"

#include <algorithm>
#include <cmath>

#include "core/numeric.hpp"

namespace planar_ar {

namespace {

constexpr long kMaxLag = 10000;
constexpr long kMaxCells = 100000000;

ConditionReport require_stationary(const ParamSet& p, const char* op) {
  ConditionReport r = check_conditions(p);
  if (!r.stationary)
    fail(ErrorCode::Nonstationary, std::string(op) + ": parameters are nonstationary (D = " +
                                       fmt_double(r.d) + ")");
  return r;
}

// Autocovariances of a causal parameter set on the closed positive quadrant
// [0..k1] x [0..k2], row-major. Seeded by the axis closed forms, filled by
// the lag recursion in wavefront order (row-major satisfies the data
// dependencies).
std::vector<double> positive_quadrant(const ParamSet& p, const AxisCoefficients& ax,
                                      long k1, long k2) {
  const long n1 = k1 + 1, n2 = k2 + 1;
  std::vector<double> q(static_cast<std::size_t>(n1) * n2);
  for (long l = 0; l <= k2; ++l) q[l] = ipow(ax.beta, l) * ax.variance;
  for (long k = 1; k <= k1; ++k) {
    double* row = &q[static_cast<std::size_t>(k) * n2];
    const double* prev = &q[static_cast<std::size_t>(k - 1) * n2];
    row[0] = ipow(ax.alpha, k) * ax.variance;
    for (long l = 1; l <= k2; ++l)
      row[l] = p.a * prev[l] + p.b * row[l - 1] + p.c * prev[l - 1];
  }
  return q;
}

double mixed_sign_value(const AxisCoefficients& ax, long h1, long h2) {
  return ipow(ax.alpha, std::labs(h1)) * ipow(ax.beta, std::labs(h2)) * ax.variance;
}

}  // namespace

AxisCoefficients axis_coefficients(const ParamSet& p) {
  ConditionReport r = require_stationary(p, "axis_coefficients");
  AxisCoefficients ax;
  ax.sqrt_d = std::sqrt(r.d);
  ax.variance = p.sigma2 / ax.sqrt_d;
  // q_a = (f1 f2 + f3 f4)/2 and q_b = (f1 f3 + f2 f4)/2; neither can vanish
  // when D > 0 (either would force D <= 0)
  const double qa = 1.0 + p.a * p.a - p.b * p.b - p.c * p.c;
  const double qb = 1.0 - p.a * p.a + p.b * p.b - p.c * p.c;
  if (qa == 0.0 || qb == 0.0)
    fail(ErrorCode::Internal, "axis denominator vanished for stationary parameters");
  const double sa = qa > 0.0 ? 1.0 : -1.0;
  const double sb = qb > 0.0 ? 1.0 : -1.0;
  ax.alpha = 2.0 * (p.a + p.b * p.c) / (qa + sa * ax.sqrt_d);
  ax.beta = 2.0 * (p.a * p.c + p.b) / (qb + sb * ax.sqrt_d);
  return ax;
}

double acf_axis(const ParamSet& p, long h, Axis axis) {
  AxisCoefficients ax = axis_coefficients(p);
  const double base = axis == Axis::First ? ax.alpha : ax.beta;
  return ipow(base, std::labs(h)) * ax.variance;
}

AcfGrid::AcfGrid(long h1_min, long h1_max, long h2_min, long h2_max)
    : h1_min_(h1_min), h1_max_(h1_max), h2_min_(h2_min), h2_max_(h2_max) {
  if (h1_min > h1_max || h2_min > h2_max)
    fail(ErrorCode::InvalidArgument, "grid window bounds must satisfy min <= max");
  if (std::max({std::labs(h1_min), std::labs(h1_max), std::labs(h2_min),
                std::labs(h2_max)}) > kMaxLag)
    fail(ErrorCode::InvalidArgument, "grid window bounds exceed the lag limit");
  if (rows() * cols() > kMaxCells)
    fail(ErrorCode::InvalidArgument, "grid window exceeds the cell limit");
  values_.assign(static_cast<std::size_t>(rows()) * cols(), 0.0);
}

double AcfGrid::at(long h1, long h2) const {
  if (!contains(h1, h2))
    fail(ErrorCode::Range, "lag (" + std::to_string(h1) + ", " + std::to_string(h2) +
                               ") outside the grid window");
  return values_[static_cast<std::size_t>(h1 - h1_min_) * cols() + (h2 - h2_min_)];
}

void AcfGrid::set(long h1, long h2, double v) {
  if (!contains(h1, h2))
    fail(ErrorCode::Range, "lag (" + std::to_string(h1) + ", " + std::to_string(h2) +
                               ") outside the grid window");
  values_[static_cast<std::size_t>(h1 - h1_min_) * cols() + (h2 - h2_min_)] = v;
}

double acf_causal(const ParamSet& p, long h1, long h2) {
  ConditionReport r = check_conditions(p);
  if (!r.causal) {
    if (!r.stationary)
      fail(ErrorCode::Nonstationary,
           "acf_causal: parameters are nonstationary (D = " + fmt_double(r.d) + ")");
    fail(ErrorCode::Noncausal,
         "acf_causal requires causal parameters; use acf_grid, which canonicalizes");
  }
  AxisCoefficients ax = axis_coefficients(p);
  if (h1 * h2 <= 0) return mixed_sign_value(ax, h1, h2);
  const long k1 = std::labs(h1), k2 = std::labs(h2);
  if (std::max(k1, k2) > kMaxLag) fail(ErrorCode::InvalidArgument, "lag exceeds the limit");
  auto q = positive_quadrant(p, ax, k1, k2);
  return q[static_cast<std::size_t>(k1) * (k2 + 1) + k2];
}

AcfGrid acf_grid(const ParamSet& p, long h1_min, long h1_max, long h2_min, long h2_max) {
  require_stationary(p, "acf_grid");
  AcfGrid out(h1_min, h1_max, h2_min, h2_max);

  CanonicalCausal canon = canonical_causal(p);
  auto signs = flip_signs(canon.flip);
  AxisCoefficients ax = axis_coefficients(canon.params);

  // extent of the positive quadrant needed after mapping lags through the flip
  const long k1 = std::max({std::labs(h1_min), std::labs(h1_max), 1L});
  const long k2 = std::max({std::labs(h2_min), std::labs(h2_max), 1L});
  std::vector<double> quad;
  bool need_quadrant = false;
  for (long h1 = h1_min; h1 <= h1_max && !need_quadrant; ++h1)
    for (long h2 = h2_min; h2 <= h2_max; ++h2)
      if (h1 != 0 && h2 != 0 && (signs[0] * h1) * (signs[1] * h2) > 0) {
        need_quadrant = true;
        break;
      }
  if (need_quadrant) quad = positive_quadrant(canon.params, ax, k1, k2);

  for (long h1 = h1_min; h1 <= h1_max; ++h1) {
    for (long h2 = h2_min; h2 <= h2_max; ++h2) {
      const long g1 = signs[0] * h1, g2 = signs[1] * h2;
      double v;
      if (g1 * g2 <= 0) {
        v = mixed_sign_value(ax, g1, g2);
      } else {
        v = quad[static_cast<std::size_t>(std::labs(g1)) * (k2 + 1) + std::labs(g2)];
      }
      out.set(h1, h2, v);
    }
  }
  return out;
}

double yw_residual(const ParamSet& p, const AcfGrid& g, long h1, long h2) {
  validate(p);
  if (!g.contains(h1, h2) || !g.contains(h1 - 1, h2) || !g.contains(h1, h2 - 1) ||
      !g.contains(h1 - 1, h2 - 1))
    fail(ErrorCode::Range, "yw_residual needs lags (h1,h2), (h1-1,h2), (h1,h2-1), "
                           "(h1-1,h2-1) inside the grid window");
  return g.at(h1, h2) - p.a * g.at(h1 - 1, h2) - p.b * g.at(h1, h2 - 1) -
         p.c * g.at(h1 - 1, h2 - 1);
}

double acf_separable(const ParamSet& p, long h1, long h2) {
  validate(p);
  if (p.c != -p.a * p.b)
    fail(ErrorCode::Domain, "acf_separable requires c = -a*b exactly");
  if (std::abs(p.a) == 1.0 || std::abs(p.b) == 1.0)
    fail(ErrorCode::Nonstationary,
         "no stationary solution in the symmetric case with |a| = 1 or |b| = 1");
  const double abase = std::abs(p.a) < 1.0 ? p.a : 1.0 / p.a;
  const double bbase = std::abs(p.b) < 1.0 ? p.b : 1.0 / p.b;
  const double denom = std::abs(1.0 - p.a * p.a) * std::abs(1.0 - p.b * p.b);
  return ipow(abase, std::labs(h1)) * ipow(bbase, std::labs(h2)) * p.sigma2 / denom;
}

ProductStructure classify_product_structure(const ParamSet& p) {
  require_stationary(p, "classify_product_structure");
  const double s = p.a * p.b + p.c;
  if (s == 0.0) return ProductStructure::FullyMultiplicative;
  const double t = 1.0 + p.c * p.c - p.a * p.a - p.b * p.b;
  if (t > 0.0) return ProductStructure::MultiplicativeOppositeQuadrant;
  if (t < 0.0) return ProductStructure::MultiplicativeSameQuadrant;
  return ProductStructure::BoundaryUnclassified;
}

const char* to_string(ProductStructure s) {
  switch (s) {
    case ProductStructure::FullyMultiplicative:
      return "fully_multiplicative";
    case ProductStructure::MultiplicativeOppositeQuadrant:
      return "multiplicative_opposite_quadrant";
    case ProductStructure::MultiplicativeSameQuadrant:
      return "multiplicative_same_quadrant";
    case ProductStructure::BoundaryUnclassified:
      return "boundary_unclassified";
  }
  return "?";
}

const char* to_string(Axis a) { return a == Axis::First ? "first" : "second"; }

}  // namespace planar_ar
