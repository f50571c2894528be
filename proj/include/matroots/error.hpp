#pragma once

#include <stdexcept>
#include <string>

namespace matroots {

// Every failure the library can signal. CLI maps these to exit code 2,
// "no result found" outcomes to exit 1, success to 0.
enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  Singular,
  DivisionByZero,
  FieldMismatch,
  NotDivisible,
  NonIntegerSpectrum,
  RepeatedEigenvalue,
  NonSimpleKernel,
  BadParity,
  ZeroV,
  TooLarge,
  FixtureCorrupt,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace matroots
