/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/params.hpp"

#include <algorithm>
#include <cmath>

#include "core/numeric.hpp"

namespace planar_ar {

namespace {
constexpr double kBoundaryWarn = 1e-9;
}

void validate(const ParamSet& p) {
  if (!(std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c) &&
        std::isfinite(p.sigma2))) {
    fail(ErrorCode::Domain, "parameters must be finite");
  }
  if (!(p.sigma2 > 0.0)) {
    fail(ErrorCode::Domain, "sigma2 must be positive, got " + fmt_double(p.sigma2));
  }
}

std::array<double, 4> stationarity_factors(const ParamSet& p) {
  return {1.0 - p.a - p.b - p.c, 1.0 - p.a + p.b + p.c,
          1.0 + p.a - p.b + p.c, 1.0 + p.a + p.b - p.c};
}

double discriminant(const ParamSet& p) {
  auto f = stationarity_factors(p);
  return f[0] * f[1] * f[2] * f[3];
}

Symmetry classify_symmetry(const ParamSet& p, double tol) {
  if (std::abs(p.a) <= tol && std::abs(p.b) <= tol && std::abs(p.c) <= tol)
    return Symmetry::Degenerate;
  if (std::abs(p.c + p.a * p.b) <= tol) return Symmetry::SymmetricABC;
  if (std::abs(p.a + p.b * p.c) <= tol) return Symmetry::TransectUncorrelated;
  return Symmetry::Generic;
}

ConditionReport check_conditions(const ParamSet& p) {
  validate(p);
  auto f = stationarity_factors(p);
  ConditionReport r;
  r.f1 = f[0];
  r.f2 = f[1];
  r.f3 = f[2];
  r.f4 = f[3];
  r.d = f[0] * f[1] * f[2] * f[3];
  r.stationary = r.d > 0.0;
  r.causal = f[0] > 0.0 && f[1] > 0.0 && f[2] > 0.0 && f[3] > 0.0;
  r.pnd_sufficient = r.stationary && 1.0 + p.c * p.c > p.a * p.a + p.b * p.b;
  double fmin = std::min(std::min(std::abs(f[0]), std::abs(f[1])),
                         std::min(std::abs(f[2]), std::abs(f[3])));
  r.near_boundary = fmin < kBoundaryWarn;
  r.symmetry = classify_symmetry(p);
  return r;
}

ParamSet transform(const ParamSet& p, int m) {
  switch (m) {
    case 1:
      return p;
    case 2:
      if (p.c == 0.0) fail(ErrorCode::Domain, "transform 2 requires c != 0");
      return {-p.b / p.c, -p.a / p.c, 1.0 / p.c, p.sigma2 / (p.c * p.c)};
    case 3:
      if (p.a == 0.0) fail(ErrorCode::Domain, "transform 3 requires a != 0");
      return {1.0 / p.a, -p.c / p.a, -p.b / p.a, p.sigma2 / (p.a * p.a)};
    case 4:
      if (p.b == 0.0) fail(ErrorCode::Domain, "transform 4 requires b != 0");
      return {-p.c / p.b, 1.0 / p.b, -p.a / p.b, p.sigma2 / (p.b * p.b)};
    default:
      fail(ErrorCode::InvalidArgument, "transform id must be 1..4");
  }
}

EquivalenceClass equivalence_class(const ParamSet& p) {
  ConditionReport rep = check_conditions(p);
  if (!rep.stationary)
    fail(ErrorCode::Nonstationary,
         "equivalence classes are defined for stationary parameters only (D = " +
             fmt_double(rep.d) + ")");

  EquivalenceClass cls;
  cls.members.push_back({1, p});
  const bool zero_a = p.a == 0.0, zero_b = p.b == 0.0, zero_c = p.c == 0.0;
  if (zero_a && zero_b && zero_c) {
    // white noise: a class of its own
  } else if (!zero_c && p.c + p.a * p.b == 0.0) {
    // c = -ab with c != 0: the ACF is even in each lag, all four transforms
    // give the same ACF
    cls.members.push_back({2, transform(p, 2)});
    cls.members.push_back({3, transform(p, 3)});
    cls.members.push_back({4, transform(p, 4)});
  } else if (!zero_c) {
    cls.members.push_back({2, transform(p, 2)});
  } else if (!zero_a && zero_b) {
    cls.members.push_back({3, transform(p, 3)});
  } else if (!zero_b && zero_a) {
    cls.members.push_back({4, transform(p, 4)});
  }
  // remaining case -ab != c = 0 with a, b both nonzero: class of its own

  cls.causal_member_index = -1;
  for (std::size_t i = 0; i < cls.members.size(); ++i) {
    if (check_conditions(cls.members[i].params).causal) {
      if (cls.causal_member_index >= 0)
        fail(ErrorCode::Internal, "two causal members in one equivalence class");
      cls.causal_member_index = static_cast<int>(i);
    }
  }
  return cls;
}

std::array<int, 2> flip_signs(AcfFlip flip) {
  switch (flip) {
    case AcfFlip::None:
      return {1, 1};
    case AcfFlip::BothAxes:
      return {-1, -1};
    case AcfFlip::FirstAxis:
      return {-1, 1};
    case AcfFlip::SecondAxis:
      return {1, -1};
  }
  return {1, 1};
}

CanonicalCausal canonical_causal(const ParamSet& p) {
  ConditionReport rep = check_conditions(p);
  if (!rep.stationary)
    fail(ErrorCode::Nonstationary,
         "no causal representative: parameters are nonstationary (D = " +
             fmt_double(rep.d) + ")");
  if (rep.causal) return {p, 1, AcfFlip::None};

  constexpr AcfFlip flips[5] = {AcfFlip::None, AcfFlip::None, AcfFlip::BothAxes,
                                AcfFlip::FirstAxis, AcfFlip::SecondAxis};
  for (int m = 2; m <= 4; ++m) {
    const double coeff = m == 2 ? p.c : (m == 3 ? p.a : p.b);
    if (coeff == 0.0) continue;
    ParamSet q = transform(p, m);
    if (check_conditions(q).causal) return {q, m, flips[m]};
  }
  fail(ErrorCode::Internal,
       "no causal member found in the transform orbit of a stationary parameter set");
}

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Generic:
      return "generic";
    case Symmetry::SymmetricABC:
      return "symmetric_abc";
    case Symmetry::TransectUncorrelated:
      return "transect_uncorrelated";
    case Symmetry::Degenerate:
      return "degenerate";
  }
  return "?";
}

const char* to_string(AcfFlip f) {
  switch (f) {
    case AcfFlip::None:
      return "none";
    case AcfFlip::BothAxes:
      return "both_axes";
    case AcfFlip::FirstAxis:
      return "first_axis";
    case AcfFlip::SecondAxis:
      return "second_axis";
  }
  return "?";
}

}  // namespace planar_ar
