#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segcalc {

// Result lies outside the decidable fragment of the Grothendieck-group
// calculus (no Kazhdan-Lusztig machinery is available to go further).
struct NotDecidableError : std::runtime_error {
  explicit NotDecidableError(const std::string& what) : std::runtime_error(what) {}
};

// Two-factor operations require both factors to carry the same kind
// (St vs Speh); point segments are compatible with either kind.
struct MixedKindsError : std::runtime_error {
  explicit MixedKindsError(const std::string& what) : std::runtime_error(what) {}
};

struct NotLinkedError : std::runtime_error {
  explicit NotLinkedError(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRangeError : std::runtime_error {
  explicit OutOfRangeError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by lift operations that require n <= m.
struct RankOrderError : std::runtime_error {
  explicit RankOrderError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuiteError : std::runtime_error {
  explicit UnknownSuiteError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  std::size_t position;
  std::string expected;
  ParseError(std::size_t pos, const std::string& expected_tokens)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": expected " + expected_tokens),
        position(pos),
        expected(expected_tokens) {}
};

}  // namespace segcalc
