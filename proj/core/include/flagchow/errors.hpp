#pragma once

#include <stdexcept>
#include <string>

namespace flagchow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad Dynkin string, invalid vertex set, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed to hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The two pushforward conventions for Steenrod operations could not be
/// told apart (or both failed) on the calibration varieties.
class CalibrationError : public InternalError {
 public:
  using InternalError::InternalError;
};

#define FLAGCHOW_ASSERT(cond, msg)                                        \
  do {                                                                    \
    if (!(cond)) throw ::flagchow::InternalError(std::string("invariant " \
                                                             "violated: ") + \
                                                 (msg));                  \
  } while (0)

}  // namespace flagchow
