#pragma once

#include <stdexcept>
#include <string>

namespace chamber {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The link has structural violations (profile mismatch, sparse or repeated
/// slots) and the requested operation needs a valid one.
class InvalidLink : public Error {
 public:
  using Error::Error;
};

class NotSplittable : public Error {
 public:
  using Error::Error;
};

class UnknownComponent : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Nesting needs a companion with exactly one component.
class MultiComponentCompanion : public Error {
 public:
  using Error::Error;
};

}  // namespace chamber
