#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symspace {

enum class ErrorKind {
  DimensionMismatch,
  RingMismatch,
  Singular,
  Inconsistent,
  WrongKind,
  Degenerate,
  NotSplit,
  NotFound,
  NotConsistent,
  NotPlusMinusOne,
  SamplerExhausted,
  BadParams,
  NotInUDprime,
  NotInGroup,
  NotStar,
  NotTransverse,
  ShapeViolation,
  ChartBoundary,
  WrongSpecies,
  UnknownEntry,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symspace
