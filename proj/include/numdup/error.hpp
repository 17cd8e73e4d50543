#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numdup {

using Int = std::int64_t;

enum class ErrorCode {
  GcdNotOne,
  NotClosed,
  NaturalsUnsupported,
  NotMember,
  EmptyGenerators,
  BaseMismatch,
  NotAnIdeal,
  BNotOddMember,
  IdealNotInS,
  RelaxedConditionFails,
  NotAlmostSymmetric,
  TypeOutOfRange,
  TypeEven,
  GcdCondition,
  BNotMember,
  CapacityExceeded,
  InvalidArgument,
  // Two independent computations of the same quantity disagreed.
  InternalMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// All domain failures of the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace numdup
