#pragma once

#include <stdexcept>

namespace tegdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is out of its domain (n_bins = 0, alpha = 100, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input data is missing, malformed, or incompatible with a model.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A model file is corrupted or truncated.
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

/// A model file was written with a format version this build does not read.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace tegdet
