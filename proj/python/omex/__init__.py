"""Exact q-series toolkit for overpartition mex statistics.

Thin python surface over the C++ core: generating-function tables,
brute-force enumeration oracles, parity and asymptotic checks, and
eta-quotient certification.
"""

from omex._core import (
    asym_points,
    character_chi,
    colored_distinct_count,
    density_scan,
    enumerate_overpartitions,
    eta_certify,
    factor_23,
    is_triangular,
    jacobi_cube,
    kronecker_symbol,
    least_r_gap,
    min_excludant,
    neg_pochhammer,
    overpartition_count,
    overpartition_series,
    parity_predict,
    pochhammer,
    sigma_mex_mod2k,
    sigma_mex_oracle,
    sigma_mex_table,
    smex_series,
    staircase_insert,
    star_value,
    triangular_gf,
    verify_congruence,
    CapExceeded,
    FractionalLeadingExponent,
    KTooSmall,
    NonUnitConstantTerm,
    UnsupportedR,
)

__all__ = [
    "asym_points",
    "character_chi",
    "colored_distinct_count",
    "density_scan",
    "enumerate_overpartitions",
    "eta_certify",
    "factor_23",
    "is_triangular",
    "jacobi_cube",
    "kronecker_symbol",
    "least_r_gap",
    "min_excludant",
    "neg_pochhammer",
    "overpartition_count",
    "overpartition_series",
    "parity_predict",
    "pochhammer",
    "sigma_mex_mod2k",
    "sigma_mex_oracle",
    "sigma_mex_table",
    "smex_series",
    "staircase_insert",
    "star_value",
    "triangular_gf",
    "verify_congruence",
    "CapExceeded",
    "FractionalLeadingExponent",
    "KTooSmall",
    "NonUnitConstantTerm",
    "UnsupportedR",
]
