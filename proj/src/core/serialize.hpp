/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <string_view>

#include "core/estimate.hpp"
#include "core/sim.hpp"

namespace planar_ar {

// CSV is UTF-8 with LF line endings and a header row; numbers are written in
// shortest round-trip form.

std::string to_csv(const AcfGrid& g);
std::string to_json(const AcfGrid& g);

std::string to_csv(const PsiTable& t);
std::string to_json(const PsiTable& t);

std::string to_csv(const FieldGrid& g);
std::string to_json(const FieldGrid& g);

/// Plain PGM (P2), maxval 255, values affinely mapped onto 0..255; the
/// mapping extremes and simulation metadata ride along in a comment line.
std::string to_pgm(const FieldGrid& g);

std::string to_json(const ParamSet& p, const ConditionReport& r);
std::string to_json(const EquivalenceClass& c);
std::string to_json(const MomentEstimate& e);

AcfGrid acf_grid_from_csv(std::string_view text);
FieldGrid field_from_csv(std::string_view text);

}  // namespace planar_ar
