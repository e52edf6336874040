#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadcode {

// Every failure the library reports. The C API mirrors these values one to one.
enum class Errc {
  InvalidArgument = 1,
  NotPrime,
  EvenCharacteristic,
  SizeCapExceeded,
  MixedFields,
  NotPrimePower,
  BadResidueClass,
  NotTwinPrimePowers,
  ConstructionFailed,
  NotHadamardInput,
  NotSquare,
  OrderImpossible,   // n > 2 and n not divisible by 4
  OrderUnreachable,  // admissible order outside the implemented constructions
  DegenerateRows,
  LengthMismatch,
  TooFewWords,
  BadShape,
  BadColumnList,
  BadParams,
  ShapeMismatch,
  TooLong,
  ParseError,
  IoError,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline bool is_not_constructible(Errc code) noexcept {
  return code == Errc::OrderImpossible || code == Errc::OrderUnreachable;
}

}  // namespace hadcode
