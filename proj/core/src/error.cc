#include "klab/error.h"

namespace klab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidParams: return "InvalidParams";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kInstanceTooLarge: return "InstanceTooLarge";
    case Errc::kEmptyInput: return "EmptyInput";
    case Errc::kInadmissibleParams: return "InadmissibleParams";
    case Errc::kInvalidPartSpec: return "InvalidPartSpec";
    case Errc::kInvalidCertificate: return "InvalidCertificate";
    case Errc::kMalformedCertificate: return "MalformedCertificate";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace klab
