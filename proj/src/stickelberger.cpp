#include "quadswan/stickelberger.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"

namespace quadswan {

int64_t augmentation(const GroupRingElem& x) {
    int64_t s = 0;
    for (int64_t c : x.coeffs) s += c;
    return s;
}

int64_t trace_residue(int64_t delta, int64_t p) {
    if (delta < 1 || delta > p - 1)
        throw Error(Errc::OutOfRange, "delta = " + std::to_string(delta) + " not in 1..p-1");
    return delta;
}

GroupRingElem theta(int64_t p) {
    require_odd_prime(p);
    GroupRingElem th{std::vector<int64_t>(p - 1)};
    for (int64_t delta = 1; delta < p; ++delta) {
        int64_t r = inv_mod(delta, p);  // coefficient sits at delta^{-1}
        th.coeffs[r - 1] = trace_residue(delta, p);
    }
    return th;
}

GroupRingElem groupring_mul(const GroupRingElem& x, const GroupRingElem& y, int64_t p) {
    assert(x.coeffs.size() == static_cast<std::size_t>(p - 1) && y.coeffs.size() == x.coeffs.size());
    GroupRingElem out{std::vector<int64_t>(p - 1)};
    for (int64_t s = 1; s < p; ++s) {
        if (x.coeffs[s - 1] == 0) continue;
        for (int64_t t = 1; t < p; ++t) {
            int64_t r = mul_mod(s, t, p);
            out.coeffs[r - 1] += x.coeffs[s - 1] * y.coeffs[t - 1];
        }
    }
    return out;
}

namespace {

// Basis of the kernel of `m` (entries already reduced mod p) over F_p,
// lifted to integer vectors with entries in 0..p-1.
std::vector<std::vector<int64_t>> nullspace_mod_p(std::vector<std::vector<int64_t>> m, int64_t p) {
    const std::size_t nr = m.size(), nc = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = row;
        while (sel < nr && m[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(m[sel], m[row]);
        const int64_t inv = inv_mod(m[row][col], p);
        for (std::size_t j = col; j < nc; ++j) m[row][j] = mul_mod(m[row][j], inv, p);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const int64_t f = m[i][col];
            for (std::size_t j = col; j < nc; ++j)
                m[i][j] = mod_reduce(m[i][j] - mul_mod(f, m[row][j], p), p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<int64_t>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < nc; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<int64_t> v(nc, 0);
        v[col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = mod_reduce(-m[i][col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

StickelbergerIdeal stickelberger_ideal(int64_t p, int degree, int64_t cap) {
    if (degree != 1)
        throw Error(Errc::Unsupported, "only the degree-one group (Z/pZ)* is implemented");
    require_odd_prime(p);
    if (p > cap)
        throw Error(Errc::CapExceeded,
                    "p = " + std::to_string(p) + " exceeds the lattice cap " + std::to_string(cap));

    const std::size_t n = static_cast<std::size_t>(p - 1);
    const GroupRingElem th = theta(p);

    // Multiplication-by-theta matrix: column s is e_s * theta.
    std::vector<std::vector<int64_t>> t_mod_p(n, std::vector<int64_t>(n));
    for (int64_t s = 1; s < p; ++s) {
        GroupRingElem e_s{std::vector<int64_t>(n, 0)};
        e_s.coeffs[s - 1] = 1;
        const GroupRingElem col = groupring_mul(e_s, th, p);
        for (std::size_t r = 0; r < n; ++r) t_mod_p[r][s - 1] = mod_reduce(col.coeffs[r], p);
    }

    // Lattice L = { alpha : alpha * theta = 0 mod p }, generated by lifted
    // kernel vectors together with p * Z[C].
    std::vector<std::vector<int64_t>> gens = nullspace_mod_p(t_mod_p, p);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int64_t> v(n, 0);
        v[i] = p;
        gens.push_back(std::move(v));
    }

    // Push L through theta/p; every product is divisible by p by construction.
    MatZ raw(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const GroupRingElem prod = groupring_mul(GroupRingElem{gens[i]}, th, p);
        for (std::size_t j = 0; j < n; ++j) {
            if (prod.coeffs[j] % p != 0) throw std::logic_error("kernel lift is not a kernel vector");
            raw.at(i, j) = prod.coeffs[j] / p;
        }
    }

    const MatZ h = hnf_rows(raw);
    StickelbergerIdeal ideal;
    ideal.p = p;
    mpz_class eps = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        GroupRingElem b{std::vector<int64_t>(n)};
        mpz_class aug = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!h.at(i, j).fits_slong_p()) throw std::overflow_error("basis entry exceeds 64 bits");
            b.coeffs[j] = h.at(i, j).get_si();
            aug += h.at(i, j);
        }
        eps = gcd(eps, aug);
        ideal.basis.push_back(std::move(b));
    }
    ideal.epsilon_gen = eps.get_si();
    return ideal;
}

bool ideal_contains(const StickelbergerIdeal& ideal, const GroupRingElem& x) {
    const std::size_t n = static_cast<std::size_t>(ideal.p - 1);
    assert(x.coeffs.size() == n);
    MatZ basis(ideal.basis.size(), n);
    for (std::size_t i = 0; i < ideal.basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = ideal.basis[i].coeffs[j];
    std::vector<mpz_class> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = x.coeffs[j];
    return hnf_contains(basis, v);
}

int64_t swan_power_exponent(int64_t p, int64_t cap) {
    return stickelberger_ideal(p, 1, cap).epsilon_gen;
}

}  // namespace quadswan
