#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqg {

enum class Errc {
  NonPrimeCharacteristic,
  DegreeZero,
  ZeroElement,
  ZeroInput,
  NotCoprime,
  FieldMismatch,
  BothZero,
  NotInvertible,
  ZeroConstantTerm,
  NotDividingXNMinus1,
  BadS,
  NotCoprimeNQ,
  SInvalid,
  NotSelfInvolutive,
  BadCongruence,
  SNotInvolutive,
  OrderNotCoprime,
  EvenCharacteristic,
  NotIrreducibleFactor,
  PreconditionFactor,
  CaseUnavailable,
  GroupMismatch,
  InconsistentPrescription,
  InvalidArgument,
  ParseError,
  // An internal invariant was violated. Never caused by user input.
  InternalConsistency,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool internal() const noexcept { return code_ == Errc::InternalConsistency; }

 private:
  Errc code_;
};

[[noreturn]] inline void panic(const std::string& what) {
  throw Error(Errc::InternalConsistency, what);
}

inline void ensure(bool cond, const char* what) {
  if (!cond) panic(what);
}

}  // namespace fqg
