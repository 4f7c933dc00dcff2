#include "quadswan/numutil.hpp"

#include "quadswan/errors.hpp"

namespace quadswan {

int64_t mod_reduce(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
    int64_t acc = 1 % m;
    int64_t b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

int64_t inv_mod(int64_t a, int64_t m) {
    // m prime throughout this library
    return pow_mod(a, m - 2, m);
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q != 0) continue;
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int64_t primitive_root_mod(int64_t p) {
    const auto fac = factorize(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;  // p = 3 handled by the loop; unreachable for prime p > 2
}

void require_odd_prime(int64_t p) {
    if (p == 2) throw Error(Errc::PrimeTwo, "p = 2 is not supported");
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
}

}  // namespace quadswan
