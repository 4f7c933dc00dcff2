#include "quadswan/residue_ring.hpp"

#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"

namespace quadswan {

ResidueRing::ResidueRing(const FieldSpec& field, int64_t p)
    : field_(field), p_(p), kind_(splitting_type(field, p)) {
    c1_ = mod_reduce(field.minpoly_c1, p);
    c0_ = mod_reduce(field.minpoly_c0, p);
    for (int64_t x = 0; x < p_; ++x)
        if ((mul_mod(x, mod_reduce(x + c1_, p_), p_) + c0_) % p_ == 0) roots_.push_back(x);
    const std::size_t expected = kind_ == SplittingType::Split ? 2 : kind_ == SplittingType::Ramified ? 1 : 0;
    if (roots_.size() != expected)
        throw std::logic_error("splitting type disagrees with the factorization of fbar");
}

RingElem ResidueRing::from_int(int64_t n) const { return {mod_reduce(n, p_), 0}; }

RingElem ResidueRing::add(RingElem x, RingElem y) const {
    return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

RingElem ResidueRing::neg(RingElem x) const {
    return {mod_reduce(-x.a, p_), mod_reduce(-x.b, p_)};
}

RingElem ResidueRing::mul(RingElem x, RingElem y) const {
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -c1 w - c0.
    int64_t bb = mul_mod(x.b, y.b, p_);
    int64_t a = mod_reduce(mul_mod(x.a, y.a, p_) - mul_mod(bb, c0_, p_), p_);
    int64_t b = mod_reduce(mul_mod(x.a, y.b, p_) + mul_mod(x.b, y.a, p_) - mul_mod(bb, c1_, p_), p_);
    return {a, b};
}

RingElem ResidueRing::pow(RingElem x, int64_t k) const {
    assert(k >= 0);
    RingElem acc = one();
    while (k > 0) {
        if (k & 1) acc = mul(acc, x);
        x = mul(x, x);
        k >>= 1;
    }
    return acc;
}

bool ResidueRing::is_unit(RingElem x) const {
    // gcd(bx + a, fbar) = 1 iff the norm form a^2 - c1 a b + c0 b^2 is nonzero.
    int64_t n = mod_reduce(mul_mod(x.a, x.a, p_) - mul_mod(c1_, mul_mod(x.a, x.b, p_), p_) +
                               mul_mod(c0_, mul_mod(x.b, x.b, p_), p_),
                           p_);
    return n != 0;
}

RingElem ResidueRing::inverse(RingElem x) const {
    if (x.b == 0) {
        if (x.a == 0) throw Error(Errc::NotAUnit, "zero has no inverse");
        return {inv_mod(x.a, p_), 0};
    }
    // One division step of Euclid: fbar = q(x)(bx + a) + r with
    // q(x) = b^{-1} x + b^{-1} t, t = c1 - a b^{-1}, r = c0 - a b^{-1} t.
    int64_t binv = inv_mod(x.b, p_);
    int64_t t = mod_reduce(c1_ - mul_mod(x.a, binv, p_), p_);
    int64_t r = mod_reduce(c0_ - mul_mod(mul_mod(x.a, binv, p_), t, p_), p_);
    if (r == 0) throw Error(Errc::NotAUnit, "zero divisor has no inverse");
    // q(x)(bx + a) = -r mod fbar, so (bx + a)^{-1} = -r^{-1} q(x).
    int64_t s = mod_reduce(-mul_mod(inv_mod(r, p_), binv, p_), p_);
    return {mul_mod(s, t, p_), s};
}

int64_t ResidueRing::unit_count() const {
    switch (kind_) {
        case SplittingType::Inert: return p_ * p_ - 1;
        case SplittingType::Split: return (p_ - 1) * (p_ - 1);
        case SplittingType::Ramified: return p_ * (p_ - 1);
    }
    return 0;
}

RingElem ResidueRing::nilpotent() const {
    if (kind_ != SplittingType::Ramified)
        throw std::logic_error("nilpotent element exists only in the ramified case");
    return {mod_reduce(-roots_[0], p_), 1};
}

namespace {

// Multiplicative order of x given a multiple `m` of it (Lagrange).
int64_t element_order(const ResidueRing& ring, RingElem x, int64_t m,
                      const std::vector<std::pair<int64_t, int>>& m_factors) {
    int64_t o = m;
    for (const auto& [q, e] : m_factors)
        for (int i = 0; i < e && o % q == 0 && ring.pow(x, o / q) == ring.one(); ++i) o /= q;
    return o;
}

bool has_order(const ResidueRing& ring, RingElem x, int64_t n,
               const std::vector<std::pair<int64_t, int>>& n_factors) {
    if (ring.pow(x, n) != ring.one()) return false;
    for (const auto& [q, e] : n_factors)
        if (ring.pow(x, n / q) == ring.one()) return false;
    return true;
}

void check_generator(const ResidueRing& ring, RingElem g, int64_t order) {
    if (!has_order(ring, g, order, factorize(order)))
        throw std::logic_error("constructed generator has the wrong order");
}

}  // namespace

UnitPresentation unit_group_structure(const ResidueRing& ring, int64_t cap) {
    const int64_t p = ring.p();
    if (p > cap)
        throw Error(Errc::CapExceeded, "p = " + std::to_string(p) + " exceeds the structure cap " +
                                           std::to_string(cap));
    UnitPresentation pres;
    switch (ring.kind()) {
        case SplittingType::Inert: {
            const int64_t n = p * p - 1;
            const auto nf = factorize(n);
            for (int64_t a = 0; a < p; ++a)
                for (int64_t b = 0; b < p; ++b) {
                    RingElem x{a, b};
                    if (!ring.is_unit(x) || !has_order(ring, x, n, nf)) continue;
                    pres.generators = {x};
                    pres.orders = {n};
                    return pres;
                }
            throw std::logic_error("no generator found in a cyclic unit group");
        }
        case SplittingType::Split: {
            // Lift (g, 1) and (1, g) through the evaluation maps at the two roots.
            const int64_t g = primitive_root_mod(p);
            const int64_t r1 = ring.fbar_roots()[0], r2 = ring.fbar_roots()[1];
            const int64_t dinv = inv_mod(mod_reduce(r1 - r2, p), p);
            auto lift = [&](int64_t v1, int64_t v2) -> RingElem {
                int64_t b = mul_mod(mod_reduce(v1 - v2, p), dinv, p);
                int64_t a = mod_reduce(v1 - mul_mod(b, r1, p), p);
                return {a, b};
            };
            pres.generators = {lift(g, 1), lift(1, g)};
            pres.orders = {p - 1, p - 1};
            break;
        }
        case SplittingType::Ramified: {
            const int64_t g = primitive_root_mod(p);
            RingElem one_plus_mu = ring.add(ring.one(), ring.nilpotent());
            pres.generators = {ring.from_int(g), one_plus_mu};
            pres.orders = {p - 1, p};
            break;
        }
    }
    for (std::size_t i = 0; i < pres.generators.size(); ++i)
        check_generator(ring, pres.generators[i], pres.orders[i]);
    return pres;
}

namespace {

struct BabyTable {
    std::unordered_map<int64_t, int64_t> table;
    RingElem giant;  // g^{-m}
    int64_t m = 0;
};

int64_t elem_key(const ResidueRing& ring, RingElem x) { return x.a * ring.p() + x.b; }

BabyTable build_baby_table(const ResidueRing& ring, RingElem g, int64_t order) {
    BabyTable bt;
    bt.m = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    RingElem cur = ring.one();
    for (int64_t j = 0; j < bt.m; ++j) {
        bt.table.emplace(elem_key(ring, cur), j);
        cur = ring.mul(cur, g);
    }
    bt.giant = ring.pow(ring.inverse(g), bt.m);
    return bt;
}

// Baby-step/giant-step for g^e = x, e in [0, order).
std::optional<int64_t> bsgs(const ResidueRing& ring, const BabyTable& bt, int64_t order, RingElem x) {
    RingElem y = x;
    for (int64_t i = 0; i * bt.m < order + bt.m; ++i) {
        auto it = bt.table.find(elem_key(ring, y));
        if (it != bt.table.end()) {
            int64_t e = i * bt.m + it->second;
            if (e < order) return e;
        }
        y = ring.mul(y, bt.giant);
    }
    return std::nullopt;
}

}  // namespace

std::vector<int64_t> discrete_log(const ResidueRing& ring, const UnitPresentation& pres, RingElem x,
                                  int64_t cap) {
    if (!ring.is_unit(x)) throw Error(Errc::NotAUnit, "discrete log of a non-unit");
    if (ring.p() > cap)
        throw Error(Errc::CapExceeded, "discrete log capped at p <= " + std::to_string(cap));

    switch (pres.generators.size()) {
        case 1: {
            BabyTable bt = build_baby_table(ring, pres.generators[0], pres.orders[0]);
            if (auto e = bsgs(ring, bt, pres.orders[0], x)) return {*e};
            break;
        }
        case 2: {
            BabyTable bt = build_baby_table(ring, pres.generators[0], pres.orders[0]);
            RingElem g2inv = ring.inverse(pres.generators[1]);
            RingElem y = x;
            for (int64_t e2 = 0; e2 < pres.orders[1]; ++e2) {
                if (auto e1 = bsgs(ring, bt, pres.orders[0], y)) return {*e1, e2};
                y = ring.mul(y, g2inv);
            }
            break;
        }
        default:
            throw std::logic_error("presentations here have one or two generators");
    }
    throw std::invalid_argument("element is not in the span of the presentation");
}

std::vector<std::vector<int64_t>> image_of_units(const ResidueRing& ring, const UnitPresentation& pres,
                                                 int64_t cap) {
    return {discrete_log(ring, pres, ring.one(), cap),
            discrete_log(ring, pres, ring.from_int(-1), cap)};
}

std::vector<std::vector<int64_t>> rational_image(const ResidueRing& ring, const UnitPresentation& pres,
                                                 int64_t cap) {
    return {discrete_log(ring, pres, ring.from_int(primitive_root_mod(ring.p())), cap)};
}

std::vector<int64_t> oracle_unit_structure(const ResidueRing& ring, int64_t cap) {
    const int64_t p = ring.p();
    if (p > cap)
        throw Error(Errc::CapExceeded,
                    "p = " + std::to_string(p) + " exceeds the oracle cap " + std::to_string(cap));

    std::vector<int64_t> orders;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b)
            if (ring.is_unit({a, b})) orders.push_back(0);
    const int64_t n = static_cast<int64_t>(orders.size());
    const auto nf = factorize(n);
    std::size_t idx = 0;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b) {
            RingElem x{a, b};
            if (ring.is_unit(x)) orders[idx++] = element_order(ring, x, n, nf);
        }

    // For each prime q | n the counts #{x : x^{q^j} = 1} = q^{e_j} determine
    // the partition of q-exponents: a_j = e_j - e_{j-1} parts are >= j.
    std::vector<std::vector<int>> partitions;
    for (const auto& [q, emax] : nf) {
        std::vector<int> num_parts_ge;  // index j-1 -> a_j
        int64_t prev_count = 1;
        int64_t qj = 1;
        for (int j = 1; j <= emax; ++j) {
            qj *= q;
            int64_t count = 0;
            for (int64_t o : orders)
                if (qj % o == 0) ++count;
            int64_t ratio = count / prev_count;
            int aj = 0;
            while (ratio > 1) {
                ratio /= q;
                ++aj;
            }
            num_parts_ge.push_back(aj);
            prev_count = count;
        }
        std::vector<int> parts;  // descending exponents
        for (std::size_t i = 0; i < static_cast<std::size_t>(num_parts_ge.empty() ? 0 : num_parts_ge[0]); ++i) {
            int lambda = 0;
            for (std::size_t j = 0; j < num_parts_ge.size(); ++j)
                if (num_parts_ge[j] > static_cast<int>(i)) lambda = static_cast<int>(j) + 1;
            parts.push_back(lambda);
        }
        partitions.push_back(std::move(parts));
    }

    std::size_t chain_len = 0;
    for (const auto& parts : partitions) chain_len = std::max(chain_len, parts.size());
    std::vector<int64_t> chain(chain_len, 1);
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        const int64_t q = nf[pi].first;
        for (std::size_t k = 0; k < partitions[pi].size(); ++k) {
            int64_t qe = 1;
            for (int i = 0; i < partitions[pi][k]; ++i) qe *= q;
            chain[chain_len - 1 - k] *= qe;  // largest part into the last slot
        }
    }
    return chain;
}

SplittingType splitting_from_factorization(const FieldSpec& field, int64_t p) {
    require_odd_prime(p);
    const int64_t c1 = mod_reduce(field.minpoly_c1, p);
    const int64_t c0 = mod_reduce(field.minpoly_c0, p);
    int roots = 0;
    for (int64_t x = 0; x < p; ++x)
        if ((mul_mod(x, mod_reduce(x + c1, p), p) + c0) % p == 0) ++roots;
    if (roots == 2) return SplittingType::Split;
    if (roots == 1) return SplittingType::Ramified;
    return SplittingType::Inert;
}

}  // namespace quadswan
