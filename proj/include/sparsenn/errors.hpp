#pragma once

#include <stdexcept>
#include <string>

namespace sparsenn {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shapes do not line up for the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A structural setting is invalid (model depth, keep ratio, strategy, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An API was called in a way its contract forbids.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A runtime value is outside its documented domain (labels, accuracies, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// File ingestion or emission failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A computation produced NaN or Inf.
class NumericsError : public Error {
 public:
  using Error::Error;
};

}  // namespace sparsenn
