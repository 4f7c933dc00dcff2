#pragma once

#include <cstdint>
#include <vector>

#include "quadswan/matz.hpp"

namespace quadswan {

using std::int64_t;

// A finite abelian group in canonical form: the invariant factor chain
// d1 | d2 | ... | dr with every factor >= 2.  The empty chain is the trivial
// group.  Construction always canonicalizes (drops unit factors, merges
// coprime ones), so equality of chains is equality of isomorphism types.
class AbGroup {
  public:
    AbGroup() = default;
    static AbGroup from_orders(const std::vector<int64_t>& moduli);
    static AbGroup cyclic(int64_t n);

    const std::vector<int64_t>& invariant_factors() const { return factors_; }
    int64_t order() const;
    int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool trivial() const { return factors_.empty(); }

    friend bool operator==(const AbGroup&, const AbGroup&) = default;

  private:
    std::vector<int64_t> factors_;
};

// Quotient of a direct product of cyclic groups (given by its list of cyclic
// orders, not necessarily a divisibility chain) by the subgroup generated by
// the given exponent vectors.  Computed from the Smith form of the relation
// matrix diag(orders) stacked over the generator rows.
AbGroup quotient(const std::vector<int64_t>& orders, const std::vector<std::vector<int64_t>>& gens);
AbGroup quotient(const AbGroup& g, const std::vector<std::vector<int64_t>>& gens);

// Isomorphism type of { x^k : x in G }.
AbGroup power_subgroup(const AbGroup& g, int64_t k);

// Isomorphism type of { x in G : x^k = 1 }.
AbGroup torsion_subgroup(const AbGroup& g, int64_t k);

}  // namespace quadswan
