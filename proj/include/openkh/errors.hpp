#pragma once

#include <stdexcept>
#include <string>

namespace openkh {

// exit codes are part of the CLI contract, keep them stable
enum class ExitCode : int { ok = 0, other = 1, parse = 2, torsion = 3, crosscheck = 4 };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual ExitCode code() const { return ExitCode::other; }
};

struct ParseError : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::parse; }
};

struct MalformedToken : ParseError {
  using ParseError::ParseError;
};

struct UnknownCurve : ParseError {
  using ParseError::ParseError;
};

struct ConfigError : ParseError {
  using ParseError::ParseError;
};

// a resolution whose H1 has torsion; the cube model does not apply there
struct TorsionEncountered : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::torsion; }
};

struct NotBraidLike : Error {
  using Error::Error;
};

struct NotAKnot : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

struct CrossCheckMismatch : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::crosscheck; }
};

}  // namespace openkh
