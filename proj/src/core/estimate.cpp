/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/estimate.hpp"

#include <cmath>

#include "core/numeric.hpp"

namespace planar_ar {

MomentEstimate recover_params(double g00, double g10, double g01, double g11,
                              EstimateSource source) {
  if (!(g00 > 0.0))
    fail(ErrorCode::Domain, "gamma(0,0) must be positive, got " + fmt_double(g00));
  const double scale = g00 * g00;
  const double den_a = scale - g01 * g01;
  const double den_b = scale - g10 * g10;
  if (std::abs(den_a) < 1e-12 * scale || std::abs(den_b) < 1e-12 * scale)
    fail(ErrorCode::IllConditioned,
         "gamma(0,0)^2 - gamma(1,0)^2 or - gamma(0,1)^2 is too small to invert");

  ParamSet p;
  p.a = (g10 * g00 - g01 * g11) / den_a;
  p.b = (g01 * g00 - g10 * g11) / den_b;
  p.c = (g11 - p.a * g01 - p.b * g10) / g00;
  const double d = discriminant(p);
  if (!(d > 0.0))
    fail(ErrorCode::InconsistentAcf,
         "recovered coefficients have D = " + fmt_double(d) +
             " <= 0; the inputs are not the low lags of any stationary model");
  p.sigma2 = g00 * std::sqrt(d);

  MomentEstimate est;
  est.params = p;
  est.equivalence = equivalence_class(p);
  est.condition_report = check_conditions(p);
  est.source = source;
  return est;
}

MomentEstimate recover_from_grid(const AcfGrid& g, EstimateSource source) {
  for (auto [h1, h2] : {std::pair<long, long>{0, 0}, {1, 0}, {0, 1}, {1, 1}})
    if (!g.contains(h1, h2))
      fail(ErrorCode::Range, "recovery needs lags (0,0), (1,0), (0,1), (1,1) in the window");

  const double g00 = g.at(0, 0), g10 = g.at(1, 0), g01 = g.at(0, 1), g11 = g.at(1, 1);

  GridOrientation orientation = GridOrientation::Unknown;
  double mixed = g11;
  if (g.contains(1, -1)) {
    const double prod = g10 * g01;
    const double r_opp = std::abs(g.at(1, -1) * g00 - prod);
    const double r_same = std::abs(g11 * g00 - prod);
    const double tol = 1e-9 * g00 * g00;
    if (r_opp <= tol && r_same <= tol) {
      orientation = GridOrientation::FlipSymmetric;
    } else if (r_opp <= r_same) {
      orientation = GridOrientation::CausalQuadrant;
    } else {
      // the product identity sits in the same-sign quadrant: the grid is the
      // one-axis flip of a causal ACF, whose own (1,1) value is our (1,-1)
      orientation = GridOrientation::FlippedQuadrant;
      mixed = g.at(1, -1);
    }
  }

  MomentEstimate est = recover_params(g00, g10, g01, mixed, source);
  est.orientation = orientation;

  if (orientation == GridOrientation::FlipSymmetric) {
    // the product identity holds in both quadrants, so the grid belongs to
    // the separable family; pin c = -a*b exactly so the equivalence class is
    // reported with its full four-member structure
    ParamSet snapped = est.params;
    snapped.c = -snapped.a * snapped.b;
    const double d = discriminant(snapped);
    if (d > 0.0) {
      snapped.sigma2 = g00 * std::sqrt(d);
      est.params = snapped;
      est.equivalence = equivalence_class(snapped);
      est.condition_report = check_conditions(snapped);
    }
  }

  if (orientation == GridOrientation::FlippedQuadrant) {
    for (int m : {3, 4}) {
      const double coeff = m == 3 ? est.params.a : est.params.b;
      if (coeff == 0.0) continue;
      ClassMember cand{m, transform(est.params, m)};
      bool dup = false;
      for (const auto& seen : est.flip_candidates)
        dup = dup || (seen.params.a == cand.params.a && seen.params.b == cand.params.b &&
                      seen.params.c == cand.params.c);
      if (!dup) est.flip_candidates.push_back(cand);
    }
  }

  if (source == EstimateSource::EmpiricalAcf) {
    for (long h1 = -2; h1 <= 2; ++h1)
      for (long h2 = -2; h2 <= 2; ++h2) {
        if (std::max(h1, h2) <= 0) continue;
        if (!g.contains(h1, h2) || !g.contains(h1 - 1, h2) || !g.contains(h1, h2 - 1) ||
            !g.contains(h1 - 1, h2 - 1))
          continue;
        est.diagnostics.push_back(
            {h1, h2, std::abs(yw_residual(est.params, g, h1, h2))});
      }
  }
  return est;
}

const char* to_string(EstimateSource s) {
  return s == EstimateSource::ExactAcf ? "exact_acf" : "empirical_acf";
}

const char* to_string(GridOrientation o) {
  switch (o) {
    case GridOrientation::Unknown:
      return "unknown";
    case GridOrientation::CausalQuadrant:
      return "causal_quadrant";
    case GridOrientation::FlippedQuadrant:
      return "flipped_quadrant";
    case GridOrientation::FlipSymmetric:
      return "flip_symmetric";
  }
  return "?";
}

}  // namespace planar_ar
