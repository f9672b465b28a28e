"""Exact enumeration, bijections, and statistics for weighted lattice paths.

The central objects are G-Motzkin paths: first-quadrant paths built from
u=(1,1), d=(1,-1), h=(1,0), and v=(0,-1) steps, weighted by formal variables
a, b, c.  Around them sit the classical Dyck, Motzkin, and Schroder families,
a collection of weight-preserving bijections between restricted subfamilies,
and Riordan-array machinery for step and point statistics by level.

Everything is exact: integer polynomials, rational series coefficients, and
exhaustive enumeration for cross-checking.
"""

from .bijections import (
    BIJECTIONS,
    BijectionSpec,
    apply_bijection,
    phi_peak,
    phi_peak_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    sigma,
    sigma_inv,
    theta,
    theta_inv,
    varphi,
    varphi_inv,
    varphi_theta,
    varphi_theta_inv,
    vartheta,
    vartheta_inv,
)
from .enumeration import (
    ballot_closed_form,
    ballot_coeff,
    catalan_number,
    closed_form,
    count_paths,
    gbinom,
    generate,
    gfull_coeffs,
    guvu_coeffs,
    iter_step_strings,
    prop21,
    weighted_count,
)
from .errors import (
    ConstraintViolation,
    DomainViolation,
    EmptyPath,
    FamilyMismatch,
    GeometryViolation,
    GPathError,
    SizeLimitExceeded,
    TruncationExceeded,
    UnknownSymbol,
    ZeroConstantTerm,
)
from .paths import (
    BASE_FAMILIES,
    BICOLORED_MOTZKIN,
    COLORED_DYCK,
    DYCK,
    GMOTZKIN,
    GMOTZKIN_UVU,
    HSTRING,
    LITTLE_SCHRODER,
    MOTZKIN,
    PSI_IMAGE,
    SCHRODER,
    Path,
    PathFamily,
    first_return_decompose,
    is_primitive,
    matching_index,
    parse,
    render,
    step_level,
    x_length,
)
from .series import (
    RiordanArray,
    TruncatedSeries,
    big_schroder_series,
    catalan_series,
    guvu_series_at,
    little_schroder_series,
    named_series,
    parse_series_expr,
    riordan_entry,
    riordan_matrix,
)
from .stats import (
    STAT_IDS,
    StatTable,
    methods_for,
    stat_brute,
    stat_formula,
    stat_riordan,
    stat_table,
)
from .verification import CheckResult, run_suite
from .weights import WEIGHTINGS, Polynomial, weight

__version__ = "0.1.0"

__all__ = [
    "BASE_FAMILIES",
    "BICOLORED_MOTZKIN",
    "BIJECTIONS",
    "BijectionSpec",
    "COLORED_DYCK",
    "CheckResult",
    "ConstraintViolation",
    "DYCK",
    "DomainViolation",
    "EmptyPath",
    "FamilyMismatch",
    "GMOTZKIN",
    "GMOTZKIN_UVU",
    "GPathError",
    "GeometryViolation",
    "HSTRING",
    "LITTLE_SCHRODER",
    "MOTZKIN",
    "PSI_IMAGE",
    "Path",
    "PathFamily",
    "Polynomial",
    "RiordanArray",
    "SCHRODER",
    "STAT_IDS",
    "SizeLimitExceeded",
    "StatTable",
    "TruncatedSeries",
    "TruncationExceeded",
    "UnknownSymbol",
    "WEIGHTINGS",
    "ZeroConstantTerm",
    "apply_bijection",
    "ballot_closed_form",
    "ballot_coeff",
    "big_schroder_series",
    "catalan_number",
    "catalan_series",
    "closed_form",
    "count_paths",
    "first_return_decompose",
    "gbinom",
    "generate",
    "gfull_coeffs",
    "guvu_coeffs",
    "guvu_series_at",
    "is_primitive",
    "iter_step_strings",
    "little_schroder_series",
    "matching_index",
    "methods_for",
    "named_series",
    "parse",
    "parse_series_expr",
    "phi_peak",
    "phi_peak_inv",
    "prop21",
    "psi",
    "psi_inv",
    "render",
    "rho",
    "rho_inv",
    "riordan_entry",
    "riordan_matrix",
    "run_suite",
    "sigma",
    "sigma_inv",
    "stat_brute",
    "stat_formula",
    "stat_riordan",
    "stat_table",
    "step_level",
    "theta",
    "theta_inv",
    "varphi",
    "varphi_inv",
    "varphi_theta",
    "varphi_theta_inv",
    "vartheta",
    "vartheta_inv",
    "weight",
    "weighted_count",
    "x_length",
]
