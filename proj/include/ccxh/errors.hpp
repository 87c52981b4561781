#pragma once

#include <stdexcept>
#include <string>

namespace ccxh {

// Error taxonomy shared across the library. The CLI maps these onto
// distinct exit codes (see tools/main.cpp).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed circuit text. `line` is 1-based.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

// Structurally well-formed input that violates a semantic constraint:
// out-of-range wire, duplicate wire within a gate, width mismatch.
struct ValidationError : Error {
  using Error::Error;
};

// A configured size limit was exceeded (tree H-count, dense qubit cap).
struct LimitError : Error {
  using Error::Error;
};

// Amplitudes from incompatible circuits were mixed (odd half-exponent gap).
struct AmplitudeError : Error {
  using Error::Error;
};

// Measurement of an empty ket or conditioning on an impossible outcome.
struct MeasurementError : Error {
  using Error::Error;
};

}  // namespace ccxh
