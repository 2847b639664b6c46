/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <vector>

#include "core/errors.hpp"

namespace planar_ar {

/// Coefficients of the planar AR(1) recurrence
///
///   X[i][j] = a X[i-1][j] + b X[i][j-1] + c X[i-1][j-1] + eps[i][j]
///
/// together with the noise variance sigma2 = Var(eps). Construction imposes
/// no stationarity requirement; the predicates are queried explicitly.
struct ParamSet {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double sigma2 = 1.0;
};

/// Throws a Domain error unless sigma2 > 0 and all fields are finite.
void validate(const ParamSet& p);

enum class Symmetry {
  Generic,
  SymmetricABC,          ///< c = -a*b: ACF even in each lag separately
  TransectUncorrelated,  ///< a = -b*c: gamma(h1, 0) = 0 for h1 != 0
  Degenerate,            ///< a = b = c = 0: white noise
};

struct ConditionReport {
  double f1, f2, f3, f4;  ///< 1-a-b-c, 1-a+b+c, 1+a-b+c, 1+a+b-c
  double d;               ///< f1 * f2 * f3 * f4
  bool stationary;        ///< d > 0 (strict)
  bool causal;            ///< all four factors strictly positive
  bool pnd_sufficient;    ///< stationary and 1 + c^2 > a^2 + b^2
  bool near_boundary;     ///< min |f_i| < 1e-9: downstream numerics degrade
  Symmetry symmetry;
};

std::array<double, 4> stationarity_factors(const ParamSet& p);
double discriminant(const ParamSet& p);

ConditionReport check_conditions(const ParamSet& p);

/// Exact classification for tol = 0 (the default); pass a tolerance to relax
/// the comparisons for parameters that only approximately satisfy a relation.
Symmetry classify_symmetry(const ParamSet& p, double tol = 0.0);

/// Parameter transform m in 1..4; each is self-inverse.
///   m=1: identity
///   m=2: (-b/c, -a/c,  1/c, sigma2/c^2)   requires c != 0
///   m=3: ( 1/a, -c/a, -b/a, sigma2/a^2)   requires a != 0
///   m=4: (-c/b,  1/b, -a/b, sigma2/b^2)   requires b != 0
/// Transforms 1 and 2 preserve the ACF; 3 and 4 flip it along one axis.
ParamSet transform(const ParamSet& p, int m);

struct ClassMember {
  int transform_id;
  ParamSet params;
};

/// All parameter sets that determine the same autocovariance function.
/// Class sizes are 1, 2 or 4.
struct EquivalenceClass {
  std::vector<ClassMember> members;  ///< identity member first
  int causal_member_index;           ///< -1 when no member is causal; the
                                     ///  causal element of the transform orbit
                                     ///  then realizes the axis-flipped ACF
};

/// Requires a stationary parameter set.
EquivalenceClass equivalence_class(const ParamSet& p);

/// How the ACF of the causal representative maps back onto the original:
/// gamma_p(h1, h2) = gamma_canonical(s1*h1, s2*h2) with (s1, s2) from
/// flip_signs().
enum class AcfFlip { None, BothAxes, FirstAxis, SecondAxis };

std::array<int, 2> flip_signs(AcfFlip flip);

struct CanonicalCausal {
  ParamSet params;
  int transform_id;
  AcfFlip flip;
};

/// The unique causal member of the orbit {T_m p : m = 1..4}; it exists for
/// every stationary p.
CanonicalCausal canonical_causal(const ParamSet& p);

const char* to_string(Symmetry s);
const char* to_string(AcfFlip f);

}  // namespace planar_ar
