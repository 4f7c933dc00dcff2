"""Swan subgroup and kernel group bounds for imaginary quadratic fields."""

from ._quadswan import (
    __version__,
    analyze,
    analyze_json,
    is_unramified,
    legendre,
    make_field,
    oracle_unit_invariants,
    power_subgroup,
    quotient_group,
    scan,
    smith_normal_form,
    splitting_type,
    swan_power_exponent,
    theta_coefficients,
    torsion_subgroup,
    unit_group_invariants,
    verify_congruence,
)

__all__ = [
    "__version__",
    "analyze",
    "analyze_json",
    "is_unramified",
    "legendre",
    "make_field",
    "oracle_unit_invariants",
    "power_subgroup",
    "quotient_group",
    "scan",
    "smith_normal_form",
    "splitting_type",
    "swan_power_exponent",
    "theta_coefficients",
    "torsion_subgroup",
    "unit_group_invariants",
    "verify_congruence",
]
