#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

enum class Err {
  NotPrime,
  UnsupportedDegree,
  DivisionByZero,
  FieldMismatch,
  CapExceeded,
  DetNotOne,
  NotGenerating,
  NotSymmetric,
  EmptySet,
  NotInPower,
  NotRss,
  BadG,
  NotSplit,
  OrbitTrapped,
  KmaxExceeded,
  BudgetExceeded,
  TooLarge,
  DimensionMismatch,
  NoConvergence,
  BadInput,
};

const char* err_name(Err e);

/// All recoverable failures in the library carry one of the codes above.
class SlError : public std::runtime_error {
 public:
  SlError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw SlError(code, msg); }

}  // namespace sl2
