#include "quadswan/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quadswan/errors.hpp"
#include "quadswan/numutil.hpp"

namespace quadswan {

AbGroup AbGroup::from_orders(const std::vector<int64_t>& moduli) {
    // Regroup prime-power parts: the k-th largest invariant factor collects
    // the k-th largest power of each prime.
    std::map<int64_t, std::vector<int>> parts;  // prime -> exponents, descending
    for (int64_t m : moduli) {
        assert(m >= 1);
        for (const auto& [q, e] : factorize(m)) parts[q].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [q, es] : parts) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    AbGroup g;
    g.factors_.assign(chain_len, 1);
    for (const auto& [q, es] : parts)
        for (std::size_t k = 0; k < es.size(); ++k) {
            int64_t qe = 1;
            for (int i = 0; i < es[k]; ++i) qe *= q;
            g.factors_[chain_len - 1 - k] *= qe;  // largest parts into the last factor
        }
    std::erase(g.factors_, 1);
    return g;
}

AbGroup AbGroup::cyclic(int64_t n) { return from_orders({n}); }

int64_t AbGroup::order() const {
    int64_t o = 1;
    for (int64_t f : factors_) o *= f;
    return o;
}

AbGroup quotient(const std::vector<int64_t>& orders, const std::vector<std::vector<int64_t>>& gens) {
    const std::size_t r = orders.size();
    for (const auto& g : gens)
        if (g.size() != r)
            throw Error(Errc::DimensionMismatch, "generator has " + std::to_string(g.size()) +
                                                     " components, ambient rank is " + std::to_string(r));
    if (r == 0) return AbGroup{};

    MatZ rel(r + gens.size(), r);
    for (std::size_t i = 0; i < r; ++i) rel.at(i, i) = orders[i];
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) rel.at(r + i, j) = gens[i][j];

    SnfResult s = smith_normal_form(rel);
    std::vector<int64_t> diag;
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& di = s.d.at(i, i);
        if (di == 0) throw std::logic_error("relation matrix lost full column rank");
        if (!di.fits_slong_p()) throw std::overflow_error("invariant factor exceeds 64 bits");
        diag.push_back(di.get_si());
    }
    return AbGroup::from_orders(diag);
}

AbGroup quotient(const AbGroup& g, const std::vector<std::vector<int64_t>>& gens) {
    return quotient(g.invariant_factors(), gens);
}

AbGroup power_subgroup(const AbGroup& g, int64_t k) {
    assert(k >= 1);
    std::vector<int64_t> f;
    for (int64_t d : g.invariant_factors()) f.push_back(d / std::gcd(d, k));
    return AbGroup::from_orders(f);
}

AbGroup torsion_subgroup(const AbGroup& g, int64_t k) {
    assert(k >= 1);
    std::vector<int64_t> f;
    for (int64_t d : g.invariant_factors()) f.push_back(std::gcd(d, k));
    return AbGroup::from_orders(f);
}

}  // namespace quadswan
