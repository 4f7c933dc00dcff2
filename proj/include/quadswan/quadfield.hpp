#pragma once

#include <cstdint>

namespace quadswan {

using std::int64_t;

// Q(sqrt(-d)) for d > 0 square-free, d not 1 or 3.  The integral generator is
// omega = (1+sqrt(-d))/2 when d = 3 (mod 4) and omega = sqrt(-d) otherwise;
// minpoly_c1/minpoly_c0 encode its minimal polynomial x^2 + c1*x + c0.
struct FieldSpec {
    int64_t d = 0;
    int64_t disc = 0;
    int64_t minpoly_c1 = 0;
    int64_t minpoly_c0 = 0;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class SplittingType { Inert, Split, Ramified };

const char* to_string(SplittingType t);

FieldSpec make_field(int64_t d);

// Euler's criterion; 0 iff p | a.
int legendre(int64_t a, int64_t p);

SplittingType splitting_type(const FieldSpec& field, int64_t p);

bool is_unramified(const FieldSpec& field, int64_t p);

}  // namespace quadswan
