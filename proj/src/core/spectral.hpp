/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <vector>

#include "core/params.hpp"

namespace planar_ar {

enum class QuadratureRule { Trapezoid, GaussLegendre };

struct QuadratureSpec {
  int nodes_per_axis = 1024;  ///< >= 16, and even for the trapezoid rule
  QuadratureRule rule = QuadratureRule::Trapezoid;
};

/// g = A + B cos(2 pi nu1) + C sin(2 pi nu1), with A, B, C functions of nu2.
/// This is the real trigonometric form of the squared modulus in the spectral
/// density denominator.
struct DenomExpansion {
  double A, B, C;
};

DenomExpansion denominator_expansion(const ParamSet& p, double nu2);

/// Spectral density sigma2 / g(nu1, nu2) on [-1/2, 1/2]^2. Requires D > 0,
/// which makes g strictly positive on the whole torus.
double density_at(const ParamSet& p, double nu1, double nu2);

/// Brute-force double-quadrature oracle for the autocovariance function.
/// The density is evaluated once on the node grid at construction; each lag
/// is then a pair of weighted cosine/sine contractions. Row sums use a fixed
/// block decomposition with pairwise reduction, so values are bit-stable for
/// any thread count.
class AcfQuadratureOracle {
 public:
  explicit AcfQuadratureOracle(const ParamSet& p, QuadratureSpec spec = {});

  double value(long h1, long h2) const;
  const QuadratureSpec& spec() const { return spec_; }

 private:
  QuadratureSpec spec_;
  std::vector<double> nodes_;             // per-axis quadrature nodes
  std::vector<double> weighted_density_;  // sigma2/g * w_i * w_j, row-major
};

/// One-shot convenience wrapper around AcfQuadratureOracle.
double acf_quadrature(const ParamSet& p, long h1, long h2, QuadratureSpec spec = {});

struct QuadratureEstimate {
  double value;
  double est_error;  ///< |change on the last node doubling|
  int nodes_used;
  bool converged;
};

/// Doubles nodes_per_axis until two successive estimates differ by < tol, or
/// max_nodes is hit (converged = false then; the caller decides whether the
/// returned value is still usable).
QuadratureEstimate acf_quadrature_auto(const ParamSet& p, long h1, long h2,
                                       double tol, int max_nodes = 16384);

/// Closed form of the periodic Poisson-kernel integral
///   int_{-1/2}^{1/2} dt / (A + B cos 2 pi t + C sin 2 pi t)
/// for A > 0, A^2 > B^2 + C^2.
double integral_poisson(double A, double B, double C);

/// Closed form of int e^{2 pi i n t} / (A + B cos 2 pi t) dt for A > |B|:
/// alpha^|n| / sqrt(A^2 - B^2) with alpha = -B / (A + sqrt(A^2 - B^2)).
double integral_ar1_kernel(double A, double B, long n);

/// Closed form of int e^{2 pi i n t} / (A - B e^{2 pi i t}) dt for complex
/// A, B with |A| != |B|.
std::complex<double> integral_unit_circle(std::complex<double> A,
                                          std::complex<double> B, long n);

/// Closed form of the contour integral behind the MA coefficients:
/// sum_{k<=min(n1,n2)} C(n1,k) C(n2,k) a^(n1-k) b^(n2-k) (ab+c)^k.
/// Requires causal parameters.
double integral_binomial(const ParamSet& p, int n1, int n2);

const char* to_string(QuadratureRule r);

}  // namespace planar_ar
