#pragma once

#include <cstdint>
#include <vector>

#include "quadswan/matz.hpp"

namespace quadswan {

using std::int64_t;

// Element of the integral group ring Z[C] for C = (Z/pZ)*; coeffs[i] is the
// coefficient of the group element with residue i+1.
struct GroupRingElem {
    std::vector<int64_t> coeffs;

    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;
};

int64_t augmentation(const GroupRingElem& x);

// Least nonnegative residue of the trace of delta; the trace is the identity
// in the degree-one case handled here.
int64_t trace_residue(int64_t delta, int64_t p);

// theta = sum over delta in C of t(delta) * delta^{-1}.
GroupRingElem theta(int64_t p);

// Convolution over the multiplicative group C.
GroupRingElem groupring_mul(const GroupRingElem& x, const GroupRingElem& y, int64_t p);

struct StickelbergerIdeal {
    int64_t p = 0;
    std::vector<GroupRingElem> basis;  // lattice basis in Hermite form
    int64_t epsilon_gen = 0;           // positive generator of the augmentation image
};

inline constexpr int64_t kDefaultLatticeCap = 101;

// J = Z[C](theta/p) intersect Z[C], computed by lifting the mod-p kernel of
// multiplication by theta to a full-rank lattice and pushing it through
// theta/p.  The degree parameter only anticipates the elementary abelian
// case; anything but degree = 1 is rejected.
StickelbergerIdeal stickelberger_ideal(int64_t p, int degree = 1, int64_t cap = kDefaultLatticeCap);

// Membership of x in the ideal lattice.
bool ideal_contains(const StickelbergerIdeal& ideal, const GroupRingElem& x);

// The power that moves the Swan subgroup into the realizable classes: the
// augmentation generator of the Stickelberger ideal, verified by the lattice
// computation.  Equals (p-1)/2 for every p under the cap.
int64_t swan_power_exponent(int64_t p, int64_t cap = kDefaultLatticeCap);

}  // namespace quadswan
