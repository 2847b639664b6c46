/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "core/acf.hpp"

namespace planar_ar {

enum class EstimateSource { ExactAcf, EmpiricalAcf };

/// Which quadrant of the observed grid carries the product identity
/// gamma(1,±1) gamma(0,0) = gamma(1,0) gamma(0,1). A causal model satisfies
/// it on the opposite-sign quadrant; a one-axis flip of a causal model
/// satisfies it on the same-sign quadrant instead.
enum class GridOrientation { Unknown, CausalQuadrant, FlippedQuadrant, FlipSymmetric };

struct YwDiagnostic {
  long h1, h2;
  double abs_residual;
};

/// Moment-based recovery result. The ACF never identifies more than the
/// causal representative, so the report carries the full set of consistent
/// parameterizations instead of a single "true" answer.
struct MomentEstimate {
  ParamSet params;               ///< the causal representative
  EquivalenceClass equivalence;  ///< parameterizations sharing params' ACF
  ConditionReport condition_report;
  EstimateSource source = EstimateSource::ExactAcf;
  GridOrientation orientation = GridOrientation::Unknown;
  /// When the observed grid is the one-axis flip of the causal ACF, the
  /// parameterizations reproducing the observed orientation (T3/T4 of
  /// params, both listed when they differ and are defined).
  std::vector<ClassMember> flip_candidates;
  /// Empirical source only: |Yule-Walker residual| of the recovered
  /// parameters on the grid at lags |h1|, |h2| <= 2.
  std::vector<YwDiagnostic> diagnostics;
};

/// Inverts the four lowest-lag autocovariances:
///   a = (g10 g00 - g01 g11) / (g00^2 - g01^2)
///   b = (g01 g00 - g10 g11) / (g00^2 - g10^2)
///   c = (g11 - a g01 - b g10) / g00
///   sigma2 = g00 sqrt(D(a, b, c))
MomentEstimate recover_params(double g00, double g10, double g01, double g11,
                              EstimateSource source = EstimateSource::ExactAcf);

/// Recovery from a grid window containing lags (0,0), (1,0), (0,1), (1,1).
/// When lag (1,-1) is also present the quadrant orientation is detected and
/// flipped grids are handled; otherwise the causal orientation is assumed.
MomentEstimate recover_from_grid(const AcfGrid& g, EstimateSource source);

const char* to_string(EstimateSource s);
const char* to_string(GridOrientation o);

}  // namespace planar_ar
