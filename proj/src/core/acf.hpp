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

/// Axis decay rates of the autocovariance function:
///   gamma(h, 0) = alpha^|h| sigma2 / sqrt(D),
///   gamma(0, h) = beta^|h|  sigma2 / sqrt(D).
/// Both |alpha| < 1 and |beta| < 1 whenever D > 0.
struct AxisCoefficients {
  double alpha;
  double beta;
  double sqrt_d;
  double variance;  ///< gamma(0, 0) = sigma2 / sqrt(D)
};

AxisCoefficients axis_coefficients(const ParamSet& p);

enum class Axis { First, Second };

double acf_axis(const ParamSet& p, long h, Axis axis);

/// Dense rectangular window of autocovariance values indexed by lag pair.
/// Storage is row-major with h1 as the row index.
class AcfGrid {
 public:
  AcfGrid(long h1_min, long h1_max, long h2_min, long h2_max);

  long h1_min() const { return h1_min_; }
  long h1_max() const { return h1_max_; }
  long h2_min() const { return h2_min_; }
  long h2_max() const { return h2_max_; }
  long rows() const { return h1_max_ - h1_min_ + 1; }
  long cols() const { return h2_max_ - h2_min_ + 1; }

  bool contains(long h1, long h2) const {
    return h1 >= h1_min_ && h1 <= h1_max_ && h2 >= h2_min_ && h2 <= h2_max_;
  }
  double at(long h1, long h2) const;
  void set(long h1, long h2, double v);
  std::span<const double> values() const { return values_; }

 private:
  long h1_min_, h1_max_, h2_min_, h2_max_;
  std::vector<double> values_;
};

/// Exact ACF of a causal parameter set at one lag. Multiplicative closed form
/// on h1*h2 <= 0; the positive quadrant is filled by the lag recursion from
/// axis seeds. Rejects non-causal parameters (acf_grid canonicalizes instead).
double acf_causal(const ParamSet& p, long h1, long h2);

/// Exact ACF window for any stationary parameter set: canonicalize to the
/// causal representative, compute its window, map lags back through the
/// recorded flip.
AcfGrid acf_grid(const ParamSet& p, long h1_min, long h1_max, long h2_min, long h2_max);

/// gamma(h1,h2) - a gamma(h1-1,h2) - b gamma(h1,h2-1) - c gamma(h1-1,h2-1),
/// read from g. For causal p this equals sigma2 at the origin and vanishes
/// whenever max(h1, h2) > 0.
double yw_residual(const ParamSet& p, const AcfGrid& g, long h1, long h2);

/// Separable closed form for the symmetric case c = -a*b (exact equality
/// required): gamma = abase^|h1| * bbase^|h2| * sigma2 / (|1-a^2| |1-b^2|),
/// where abase is a if |a| < 1 and 1/a otherwise (same for b).
double acf_separable(const ParamSet& p, long h1, long h2);

enum class ProductStructure {
  FullyMultiplicative,             ///< ab + c = 0: product form at every lag
  MultiplicativeOppositeQuadrant,  ///< product form exactly on h1*h2 <= 0
  MultiplicativeSameQuadrant,      ///< product form exactly on h1*h2 >= 0
  BoundaryUnclassified,            ///< 1 + c^2 = a^2 + b^2 with ab + c != 0
};

ProductStructure classify_product_structure(const ParamSet& p);

const char* to_string(ProductStructure s);
const char* to_string(Axis a);

}  // namespace planar_ar
