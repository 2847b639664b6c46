/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace planar_ar {

/// Failure classification; the C API maps these one-to-one onto status codes.
enum class ErrorCode {
  InvalidArgument,   ///< malformed call (bad enum value, null handle, ...)
  Domain,            ///< argument outside the mathematical domain of the operation
  Nonstationary,     ///< D <= 0: no stationary solution exists
  Noncausal,         ///< operation requires f1..f4 > 0
  Range,             ///< lag or index outside a grid/table window
  IllConditioned,    ///< denominator too small for a reliable result
  InconsistentAcf,   ///< values not realizable by any stationary model
  Convergence,       ///< iteration cap reached before the tolerance was met
  Parse,             ///< malformed serialized input
  Internal,          ///< invariant violation; must not occur
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace planar_ar
