#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadswan/abelian.hpp"
#include "quadswan/quadfield.hpp"

namespace quadswan {

// Whether the lower and upper realizable-intersection bounds are known to
// coincide.  Never "false": coprimality of the exponent with (p-1)/2 is a
// sufficient condition only.
enum class RdEquality { Guaranteed, Unknown };

const char* to_string(RdEquality e);

// Everything this library can say about the Swan subgroup T, the kernel
// group D, and the realizable intersection R cap D of O_K[C_p] for one
// (field, p) pair.
struct SwanReport {
    FieldSpec field;
    int64_t p = 0;
    SplittingType splitting = SplittingType::Inert;

    AbGroup unit_group;  // (O_K/pO_K)*
    AbGroup v_p;         // unit group modulo the image of the global units

    AbGroup lower_t;
    AbGroup upper_t;
    std::optional<AbGroup> exact_t;  // set when the bounds pin T down
    bool d_equals_t = false;         // D = T holds on unramified input

    AbGroup lower_rd;
    std::optional<AbGroup> upper_rd;  // absent in the ramified case
    RdEquality rd_equality = RdEquality::Unknown;

    bool nontrivial = false;  // a tame degree-p extension without a normal
                              // integral basis is guaranteed to exist
};

// V_p as a quotient of the unit group decomposition.
AbGroup compute_vp(const std::vector<int64_t>& unit_orders,
                   const std::vector<std::vector<int64_t>>& unit_image);

// Image of the surjection T -> V_p^{p-1}.
AbGroup lower_bound_t(const AbGroup& v_p, int64_t p);

// T is a quotient of the unit group by the rational residues and the global
// unit image together.
AbGroup upper_bound_t(const std::vector<int64_t>& unit_orders,
                      const std::vector<std::vector<int64_t>>& unit_image,
                      const std::vector<std::vector<int64_t>>& rational_gens);

struct RealizableBounds {
    AbGroup lower_rd;
    std::optional<AbGroup> upper_rd;
    RdEquality rd_equality = RdEquality::Unknown;
};

RealizableBounds realizable_bounds(const AbGroup& v_p, const AbGroup& upper_t,
                                   const std::optional<AbGroup>& exact_t, SplittingType splitting,
                                   int64_t p);

SwanReport kernel_group_report(const FieldSpec& field, int64_t p, int64_t structure_cap = 4096);

}  // namespace quadswan
