#pragma once

#include <stdexcept>
#include <string>

namespace quadswan {

// Every validation failure in the library carries one of these codes so the
// CLI (and the python bindings) can report the precise reason.
enum class Errc {
    NotPositive,
    NotSquareFree,
    ExcludedD,
    NotPrime,
    PrimeTwo,
    NotAUnit,
    CapExceeded,
    DimensionMismatch,
    OutOfRange,
    NotCoprime,
    Unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace quadswan
