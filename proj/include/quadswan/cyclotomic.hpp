#pragma once

#include <cstdint>
#include <vector>

namespace quadswan {

using std::int64_t;

// Element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}
// (zeta^{p-1} folded to -(1 + zeta + ... + zeta^{p-2})).
using CycloElem = std::vector<int64_t>;

// (1 - zeta^n)/(1 - zeta) = 1 + zeta + ... + zeta^{n-1}.
CycloElem cyclotomic_unit(int64_t p, int64_t n);

CycloElem cyclo_mul(const CycloElem& x, const CycloElem& y, int64_t p);
CycloElem cyclo_sub(const CycloElem& x, const CycloElem& y, int64_t p);

// 1 - zeta^n in reduced form.
CycloElem one_minus_zeta_pow(int64_t p, int64_t n);

// Image under Z[zeta] -> F_p, zeta -> 1 (reduction mod pi = 1 - zeta).
int64_t residue_mod_pi(const CycloElem& x, int64_t p);

// For every n in 1..p-1: u_n = n (mod pi) and u_n * (1 - zeta) = 1 - zeta^n
// exactly.  This is what makes every rational residue a unit image.
bool verify_congruence(int64_t p, int64_t cap = 97);

}  // namespace quadswan
