#include "quadswan/quadfield.hpp"

#include <string>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"

namespace quadswan {

const char* to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Inert: return "inert";
        case SplittingType::Split: return "split";
        case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

FieldSpec make_field(int64_t d) {
    if (d <= 0) throw Error(Errc::NotPositive, "d = " + std::to_string(d) + " must be positive");
    if (d == 1 || d == 3)
        throw Error(Errc::ExcludedD, "d = " + std::to_string(d) + " has extra units and is excluded");
    for (int64_t q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0)
            throw Error(Errc::NotSquareFree,
                        "d = " + std::to_string(d) + " is divisible by " + std::to_string(q * q));

    FieldSpec f;
    f.d = d;
    if (d % 4 == 3) {
        f.disc = -d;
        f.minpoly_c1 = -1;
        f.minpoly_c0 = (1 + d) / 4;
    } else {
        f.disc = -4 * d;
        f.minpoly_c1 = 0;
        f.minpoly_c0 = d;
    }
    return f;
}

int legendre(int64_t a, int64_t p) {
    require_odd_prime(p);
    int64_t r = pow_mod(mod_reduce(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

SplittingType splitting_type(const FieldSpec& field, int64_t p) {
    switch (legendre(field.disc, p)) {
        case 0: return SplittingType::Ramified;
        case 1: return SplittingType::Split;
        default: return SplittingType::Inert;
    }
}

bool is_unramified(const FieldSpec& field, int64_t p) {
    return splitting_type(field, p) != SplittingType::Ramified;
}

}  // namespace quadswan
