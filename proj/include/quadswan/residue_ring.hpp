#pragma once

#include <cstdint>
#include <vector>

#include "quadswan/quadfield.hpp"

namespace quadswan {

// Element a + b*wbar of O_K/pO_K, coordinates reduced mod p.
struct RingElem {
    int64_t a = 0;
    int64_t b = 0;

    friend bool operator==(const RingElem&, const RingElem&) = default;
};

// O_K/pO_K realized uniformly as F_p[x]/(fbar) with fbar the minimal
// polynomial of the integral generator reduced mod p.  The splitting type of
// p decides the structure: a field with p^2 elements (inert), F_p x F_p
// (split), or F_p[mu] with mu^2 = 0 (ramified).
class ResidueRing {
  public:
    ResidueRing(const FieldSpec& field, int64_t p);

    const FieldSpec& field() const { return field_; }
    int64_t p() const { return p_; }
    SplittingType kind() const { return kind_; }
    int64_t fbar_c1() const { return c1_; }
    int64_t fbar_c0() const { return c0_; }

    // Roots of fbar in F_p: two (split), one double root (ramified), none (inert).
    const std::vector<int64_t>& fbar_roots() const { return roots_; }

    bool valid(RingElem x) const { return 0 <= x.a && x.a < p_ && 0 <= x.b && x.b < p_; }
    RingElem zero() const { return {0, 0}; }
    RingElem one() const { return {1 % p_, 0}; }
    RingElem from_int(int64_t n) const;

    RingElem add(RingElem x, RingElem y) const;
    RingElem neg(RingElem x) const;
    RingElem mul(RingElem x, RingElem y) const;
    RingElem pow(RingElem x, int64_t k) const;
    bool is_unit(RingElem x) const;
    RingElem inverse(RingElem x) const;

    int64_t unit_count() const;

    // The nilpotent generator mu = wbar - r in the ramified case, fbar = (x-r)^2.
    RingElem nilpotent() const;

  private:
    FieldSpec field_;
    int64_t p_;
    int64_t c1_, c0_;
    SplittingType kind_;
    std::vector<int64_t> roots_;
};

// Multiplicative generators of (O_K/pO_K)* together with their orders; the
// generated cyclic factors give the whole unit group as a direct product.
struct UnitPresentation {
    std::vector<RingElem> generators;
    std::vector<int64_t> orders;
};

// Constructive unit group decomposition.  Inert: one generator of order
// p^2-1 found by ordered search.  Split: lifts of a primitive root through
// the two roots of fbar.  Ramified: a scalar primitive root and 1 + mu.
UnitPresentation unit_group_structure(const ResidueRing& ring, int64_t cap = 4096);

// Exponent vector of unit x over the presentation's generators.
std::vector<int64_t> discrete_log(const ResidueRing& ring, const UnitPresentation& pres, RingElem x,
                                  int64_t cap = 4096);

// Exponent vectors of the images of the global units {1, -1}.
std::vector<std::vector<int64_t>> image_of_units(const ResidueRing& ring, const UnitPresentation& pres,
                                                 int64_t cap = 4096);

// Exponent vector(s) generating the diagonal image of (Z/pZ)*.
std::vector<std::vector<int64_t>> rational_image(const ResidueRing& ring, const UnitPresentation& pres,
                                                 int64_t cap = 4096);

// Brute-force unit group structure: enumerate all p^2 elements, count
// solutions of x^k = 1, and rebuild the invariant factors from the counts.
// Independent of the constructive path above.
std::vector<int64_t> oracle_unit_structure(const ResidueRing& ring, int64_t cap = 997);

// Splitting classification by factoring the minimal polynomial mod p;
// independent of the Legendre-symbol route in splitting_type().
SplittingType splitting_from_factorization(const FieldSpec& field, int64_t p);

}  // namespace quadswan
