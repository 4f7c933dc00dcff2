#include "quadswan/cyclotomic.hpp"

#include <numeric>
#include <string>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"

namespace quadswan {

namespace {

// Fold a coefficient vector over exponents 0..p-1 (zeta^p = 1) into the
// power basis of degree <= p-2.
CycloElem fold(const std::vector<int64_t>& full, int64_t p) {
    CycloElem out(p - 1);
    const int64_t top = full[p - 1];
    for (int64_t i = 0; i < p - 1; ++i) out[i] = full[i] - top;
    return out;
}

}  // namespace

CycloElem cyclotomic_unit(int64_t p, int64_t n) {
    require_odd_prime(p);
    if (std::gcd(n, p) != 1)
        throw Error(Errc::NotCoprime, "n = " + std::to_string(n) + " shares a factor with p");
    if (n < 1 || n > p - 1)
        throw Error(Errc::OutOfRange, "n must lie in 1..p-1");
    CycloElem u(p - 1, 0);
    for (int64_t i = 0; i < n; ++i) u[i] = 1;
    return u;
}

CycloElem cyclo_mul(const CycloElem& x, const CycloElem& y, int64_t p) {
    std::vector<int64_t> full(p, 0);
    for (int64_t i = 0; i < p - 1; ++i) {
        if (x[i] == 0) continue;
        for (int64_t j = 0; j < p - 1; ++j) full[(i + j) % p] += x[i] * y[j];
    }
    return fold(full, p);
}

CycloElem cyclo_sub(const CycloElem& x, const CycloElem& y, int64_t p) {
    CycloElem out(p - 1);
    for (int64_t i = 0; i < p - 1; ++i) out[i] = x[i] - y[i];
    return out;
}

CycloElem one_minus_zeta_pow(int64_t p, int64_t n) {
    std::vector<int64_t> full(p, 0);
    full[0] += 1;
    full[mod_reduce(n, p)] -= 1;
    return fold(full, p);
}

int64_t residue_mod_pi(const CycloElem& x, int64_t p) {
    int64_t s = 0;
    for (int64_t c : x) s = mod_reduce(s + c, p);
    return s;
}

bool verify_congruence(int64_t p, int64_t cap) {
    require_odd_prime(p);
    if (p > cap)
        throw Error(Errc::CapExceeded,
                    "p = " + std::to_string(p) + " exceeds the verification cap " + std::to_string(cap));
    const CycloElem pi = one_minus_zeta_pow(p, 1);
    for (int64_t n = 1; n < p; ++n) {
        const CycloElem u = cyclotomic_unit(p, n);
        if (residue_mod_pi(u, p) != n % p) return false;
        if (cyclo_mul(u, pi, p) != one_minus_zeta_pow(p, n)) return false;
    }
    return true;
}

}  // namespace quadswan
