#include "quiddity/error.hpp"

#include <atomic>

namespace qlab {

const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedSpec: return "MalformedSpec";
    case Err::CompositeP: return "CompositeP";
    case Err::ReduciblePolynomial: return "ReduciblePolynomial";
    case Err::NTooSmall: return "NTooSmall";
    case Err::NotAUnit: return "NotAUnit";
    case Err::RingMismatch: return "RingMismatch";
    case Err::OrderCapExceeded: return "OrderCapExceeded";
    case Err::NotAField: return "NotAField";
    case Err::PEven: return "PEven";
    case Err::PNotPrime: return "PNotPrime";
    case Err::CharTwo: return "CharTwo";
    case Err::AZero: return "AZero";
    case Err::OutOfRange: return "OutOfRange";
    case Err::TooLarge: return "TooLarge";
    case Err::WrongCharacteristic: return "WrongCharacteristic";
    case Err::ContinuantNotUnitSign: return "ContinuantNotUnitSign";
    case Err::NotASolution: return "NotASolution";
    case Err::TooShort: return "TooShort";
    case Err::BadU: return "BadU";
    case Err::NotUnits: return "NotUnits";
    case Err::ABNotInvertible: return "ABNotInvertible";
    case Err::PTooSmall: return "PTooSmall";
    case Err::XZero: return "XZero";
    case Err::WitnessNotFound: return "WitnessNotFound";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::RangeTooLarge: return "RangeTooLarge";
    case Err::MalformedElement: return "MalformedElement";
    case Err::Budget: return "Budget";
  }
  return "Unknown";
}

bool is_budget_error(Err e) {
  switch (e) {
    case Err::OrderCapExceeded:
    case Err::SizeCapExceeded:
    case Err::RangeTooLarge:
    case Err::Budget:
      return true;
    default:
      return false;
  }
}

Error::Error(Err kind, const std::string& msg)
    : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

void raise(Err kind, const std::string& msg) { throw Error(kind, msg); }

namespace {
std::atomic<std::uint64_t> g_budget{10'000'000};
}

std::uint64_t budget() { return g_budget.load(std::memory_order_relaxed); }
void set_budget(std::uint64_t ops) { g_budget.store(ops, std::memory_order_relaxed); }

}  // namespace qlab
