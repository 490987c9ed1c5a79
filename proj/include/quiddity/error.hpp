#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlab {

enum class Err {
  MalformedSpec,
  CompositeP,
  ReduciblePolynomial,
  NTooSmall,
  NotAUnit,
  RingMismatch,
  OrderCapExceeded,
  NotAField,
  PEven,
  PNotPrime,
  CharTwo,
  AZero,
  OutOfRange,
  TooLarge,
  WrongCharacteristic,
  ContinuantNotUnitSign,
  NotASolution,
  TooShort,
  BadU,
  NotUnits,
  ABNotInvertible,
  PTooSmall,
  XZero,
  WitnessNotFound,
  SizeCapExceeded,
  RangeTooLarge,
  MalformedElement,
  Budget,
};

const char* err_name(Err e);

// Caps that grow with the input (iteration counts, search memory) map to the
// budget exit code; static domain preconditions do not.
bool is_budget_error(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg);
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] void raise(Err kind, const std::string& msg);

// Shared iteration/memory cap. Default 1e7, overridable (CLI wires the
// QUIDDITY_BUDGET environment variable here).
std::uint64_t budget();
void set_budget(std::uint64_t ops);

}  // namespace qlab
