#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klab {

enum class Errc {
  kInvalidParams,
  kCapExceeded,
  kInstanceTooLarge,
  kEmptyInput,
  kInadmissibleParams,
  kInvalidPartSpec,
  kInvalidCertificate,
  kMalformedCertificate,
  kLengthMismatch,
  kInternal,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// command-line layer can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace klab
