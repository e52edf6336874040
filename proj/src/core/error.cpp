#include "hadcode/error.hpp"

namespace hadcode {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::BadResidueClass: return "BadResidueClass";
    case Errc::NotTwinPrimePowers: return "NotTwinPrimePowers";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::NotHadamardInput: return "NotHadamardInput";
    case Errc::NotSquare: return "NotSquare";
    case Errc::OrderImpossible: return "OrderImpossible";
    case Errc::OrderUnreachable: return "OrderUnreachable";
    case Errc::DegenerateRows: return "DegenerateRows";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewWords: return "TooFewWords";
    case Errc::BadShape: return "BadShape";
    case Errc::BadColumnList: return "BadColumnList";
    case Errc::BadParams: return "BadParams";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::TooLong: return "TooLong";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace hadcode
