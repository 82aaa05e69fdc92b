#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

enum class ErrorKind {
  MalformedCycle,
  GroupTooLarge,
  UnknownSpec,
  MalformedInput,
  NotASubgroup,
  GroupMismatch,
  IntegerOverflow,
  InexactDivision,
  CapExceeded,
  NonIntegralIndicator,
  NonIntegralDimension,
  NonIntegralMultiplicity,
  UnpairedComplexCharacter,
  SingularBlock,
  NotAUnit,
  NoSolution,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// All library failures carry a kind so the CLI can map them onto exit codes
/// and a machine-parsable reason line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Checked 64-bit arithmetic. Overflow raises IntegerOverflow.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::IntegerOverflow, "multiplication overflow");
  return r;
}

}  // namespace burnside
