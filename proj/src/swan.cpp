#include "quadswan/swan.hpp"

#include <cassert>
#include <numeric>

#include "quadswan/residue_ring.hpp"

namespace quadswan {

const char* to_string(RdEquality e) {
    return e == RdEquality::Guaranteed ? "guaranteed" : "unknown";
}

AbGroup compute_vp(const std::vector<int64_t>& unit_orders,
                   const std::vector<std::vector<int64_t>>& unit_image) {
    return quotient(unit_orders, unit_image);
}

AbGroup lower_bound_t(const AbGroup& v_p, int64_t p) { return power_subgroup(v_p, p - 1); }

AbGroup upper_bound_t(const std::vector<int64_t>& unit_orders,
                      const std::vector<std::vector<int64_t>>& unit_image,
                      const std::vector<std::vector<int64_t>>& rational_gens) {
    std::vector<std::vector<int64_t>> joint = unit_image;
    joint.insert(joint.end(), rational_gens.begin(), rational_gens.end());
    return quotient(unit_orders, joint);
}

RealizableBounds realizable_bounds(const AbGroup& v_p, const AbGroup& upper_t,
                                   const std::optional<AbGroup>& exact_t, SplittingType splitting,
                                   int64_t p) {
    RealizableBounds rb;
    if (splitting == SplittingType::Ramified) {
        // T is pinned down exactly and sits inside R cap D, but without
        // D = T there is no upper bound to report.
        assert(exact_t.has_value());
        rb.lower_rd = *exact_t;
        rb.upper_rd = std::nullopt;
        rb.rd_equality = RdEquality::Unknown;
        return rb;
    }
    rb.lower_rd = power_subgroup(v_p, (p - 1) * (p - 1) / 2);
    rb.upper_rd = upper_t;
    // T's exponent divides the upper bound's, so coprimality transfers down.
    const int64_t e = exact_t ? exact_t->exponent() : upper_t.exponent();
    rb.rd_equality = std::gcd(e, (p - 1) / 2) == 1 ? RdEquality::Guaranteed : RdEquality::Unknown;
    return rb;
}

SwanReport kernel_group_report(const FieldSpec& field, int64_t p, int64_t structure_cap) {
    const ResidueRing ring(field, p);
    const UnitPresentation pres = unit_group_structure(ring, structure_cap);
    const auto unit_img = image_of_units(ring, pres, structure_cap);
    const auto rat_img = rational_image(ring, pres, structure_cap);

    SwanReport r;
    r.field = field;
    r.p = p;
    r.splitting = ring.kind();
    r.unit_group = AbGroup::from_orders(pres.orders);
    r.v_p = compute_vp(pres.orders, unit_img);
    r.lower_t = lower_bound_t(r.v_p, p);
    r.upper_t = upper_bound_t(pres.orders, unit_img, rat_img);
    r.d_equals_t = r.splitting != SplittingType::Ramified;
    if (r.lower_t == r.upper_t) r.exact_t = r.lower_t;

    const RealizableBounds rb = realizable_bounds(r.v_p, r.upper_t, r.exact_t, r.splitting, p);
    r.lower_rd = rb.lower_rd;
    r.upper_rd = rb.upper_rd;
    r.rd_equality = rb.rd_equality;
    r.nontrivial = !r.lower_rd.trivial();
    return r;
}

}  // namespace quadswan
