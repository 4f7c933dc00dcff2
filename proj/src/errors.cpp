#include "quadswan/errors.hpp"

namespace quadswan {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPositive: return "NotPositive";
        case Errc::NotSquareFree: return "NotSquareFree";
        case Errc::ExcludedD: return "ExcludedD";
        case Errc::NotPrime: return "NotPrime";
        case Errc::PrimeTwo: return "PrimeTwo";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace quadswan
