#include "ffgeom/error.hpp"

namespace ffgeom {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::PinNotInSet: return "PinNotInSet";
    case Errc::NoBase: return "NoBase";
    case Errc::OriginInF: return "OriginInF";
    case Errc::InsufficientPinnedLines: return "InsufficientPinnedLines";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::FieldHeaderMismatch: return "FieldHeaderMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ffgeom
