#pragma once

#include <stdexcept>
#include <string>

namespace bgm {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap would be exceeded (exit code 3 at the CLI).
struct CapExceeded : Error {
  using Error::Error;
};

/// A requested method does not apply to the given input (exit code 4).
struct NotApplicable : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct MembershipError : Error {
  using Error::Error;
};

struct IllFormedHom : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotCentral : Error {
  using Error::Error;
};

struct NotIso : Error {
  using Error::Error;
};

struct NotSubgroup : Error {
  using Error::Error;
};

struct NotPGroup : Error {
  using Error::Error;
};

struct EvenPrimeUnsupported : Error {
  using Error::Error;
};

struct GeneratorSearchFailed : Error {
  using Error::Error;
};

/// A quotient that should be finite produced a zero invariant factor.
struct InfiniteQuotient : Error {
  using Error::Error;
};

}  // namespace bgm
