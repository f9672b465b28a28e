"""Step and point statistics at a fixed level over uvu-avoiding paths.

Ten statistics, each computable by up to three independent routes that the
acceptance suite plays against each other:

  brute    exhaustive enumeration and direct counting,
  riordan  coefficient extraction from a Riordan array (d(x), h(x)),
  formula  the explicit alternating double sums (U, H, P only).

Table conventions (i is the level index, columns 0..n per row):

  U   u-steps ending at level i+1 over paths of x-length n+1
  V   v-steps at level i       over paths of x-length n+1
  D   d-steps at level i       over paths of x-length n+2
  H   h-steps at level i       over paths of x-length n+1
  P   lattice points at level i over paths of x-length n

and the r-suffixed variants are the same counts over paths with no
horizontal step on the axis, with u_r/v_r at the same offsets, h_r counting
h-steps at level i+1 over x-length n+2, and p_r points over x-length n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .enumeration import ballot_coeff, iter_step_strings
from .errors import DomainViolation
from .paths import GMOTZKIN_UVU, STEP_GEOMETRY
from .series import (
    DEFAULT_ORDER,
    RiordanArray,
    big_schroder_series,
    parse_series_expr,
)

GMOTZKIN_UVU_RESTRICTED = GMOTZKIN_UVU.restricted()

# stat -> (counted letter or "points", level offset, x-length offset, restricted)
STAT_DEFS: dict[str, tuple[str, int, int, bool]] = {
    "U": ("u", 1, 1, False),
    "V": ("v", 0, 1, False),
    "D": ("d", 0, 2, False),
    "H": ("h", 0, 1, False),
    "P": ("points", 0, 0, False),
    "u_r": ("u", 1, 1, True),
    "v_r": ("v", 0, 1, True),
    "d_r": ("d", 0, 2, True),
    "h_r": ("h", 1, 2, True),
    "p_r": ("points", 0, 0, True),
}

STAT_IDS = tuple(STAT_DEFS)
FORMULA_STATS = ("U", "H", "P")


def _check_stat(stat: str) -> tuple[str, int, int, bool]:
    try:
        return STAT_DEFS[stat]
    except KeyError:
        raise DomainViolation(
            f"unknown statistic {stat!r}; choose from " + ", ".join(STAT_DEFS)
        ) from None


# ---------------------------------------------------------------------------
# brute force
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _brute_counts(m: int, restricted: bool, max_n_override):
    """Aggregate (letter, level) step counts and point counts over all
    uvu-avoiding paths of x-length m."""
    family = GMOTZKIN_UVU_RESTRICTED if restricted else GMOTZKIN_UVU
    step_counts: dict[tuple[str, int], int] = {}
    point_counts: dict[int, int] = {}
    for steps in iter_step_strings(family, m, max_n_override):
        level = 0
        point_counts[0] = point_counts.get(0, 0) + 1
        for c in steps:
            level += STEP_GEOMETRY[c][1]
            key = (c, level)
            step_counts[key] = step_counts.get(key, 0) + 1
            point_counts[level] = point_counts.get(level, 0) + 1
    return step_counts, point_counts


def stat_brute(stat: str, n: int, i: int, max_n_override: int | None = None) -> int:
    kind, level_off, size_off, restricted = _check_stat(stat)
    m = n + size_off
    if m < 0 or i < 0:
        return 0
    step_counts, point_counts = _brute_counts(m, restricted, max_n_override)
    if kind == "points":
        return point_counts.get(i, 0)
    return step_counts.get((kind, i + level_off), 0)


# ---------------------------------------------------------------------------
# Riordan arrays
# ---------------------------------------------------------------------------

_ARRAY_EXPRS = {
    "U": "S^3*one_over_1px",
    "H": "S^2",
    "P": "one_plus_x2*S^4*one_over_1px",
    "u_r": "s^2*S*one_over_1px",
    "h_r": "s^2*S^2",
    "p_r": "one_plus_x2*one_over_1px*s^2*S^2",
}

_COLUMN_EXPR = "x*S^2"


@lru_cache(maxsize=None)
def _riordan_array(stat: str, order: int) -> RiordanArray:
    return RiordanArray(
        parse_series_expr(_ARRAY_EXPRS[stat], order),
        parse_series_expr(_COLUMN_EXPR, order),
    )


@lru_cache(maxsize=None)
def _p_r_axis_series(order: int):
    # Points on the axis over restricted paths: s + x s^2 S / (1+x).  The
    # second term counts axis returns; it must be x times the u_r axis
    # column s^2 S / (1+x), since every return closes exactly one excursion
    # opened by a u-step to level 1.
    return parse_series_expr("s", order) + parse_series_expr(
        "x*s^2*S*one_over_1px", order
    )


def _schroder_number(n: int, order: int) -> int:
    return big_schroder_series(max(order, n)).coeff(n)


def stat_riordan(stat: str, n: int, i: int) -> int:
    _check_stat(stat)
    if n < 0 or i < 0:
        return 0
    order = max(DEFAULT_ORDER, n + 1)
    if stat in ("U", "u_r"):
        return _riordan_array(stat, order).entry(n, i)
    if stat in ("V", "v_r"):
        base = "U" if stat == "V" else "u_r"
        return stat_riordan(base, n, i) - stat_riordan(base, n - 1, i)
    if stat in ("D", "d_r"):
        return stat_riordan("U" if stat == "D" else "u_r", n, i)
    if stat in ("H", "h_r"):
        return _riordan_array(stat, order).entry(n, i)
    if stat == "P":
        if i == 0:
            if n == 0:
                return 1
            return (
                _schroder_number(n, order)
                + stat_riordan("U", n - 1, 0)
                + stat_riordan("H", n - 1, 0)
            )
        return _riordan_array("P", order).entry(n - 1, i - 1)
    # p_r
    if i == 0:
        return _p_r_axis_series(order).coeff(n)
    return _riordan_array("p_r", order).entry(n - 1, i - 1)


# ---------------------------------------------------------------------------
# explicit sums
# ---------------------------------------------------------------------------


def _u_formula(n: int, i: int) -> int:
    total = 0
    for j in range(n - i + 1):
        inner = 0
        for m in range(n - i - j + 1):
            inner += comb(n + m + i - j + 2, n - i - j - m) * ballot_coeff(
                m, 2 * i + 3
            )
        total += (-1) ** j * inner
    return total


def _h_formula(n: int, i: int) -> int:
    total = 0
    for m in range(n - i + 1):
        total += comb(n + m + i + 1, n - i - m) * ballot_coeff(m, 2 * i + 2)
    return total


def _p_formula_shifted(n: int, i: int) -> int:
    # the double sums give points at level i+1 over paths of x-length n+1
    total = 0
    for j in range(n - i + 1):
        inner = 0
        for m in range(n - i - j + 1):
            inner += comb(n + m + i - j + 3, n - i - j - m) * ballot_coeff(
                m, 2 * i + 4
            )
        total += (-1) ** j * inner
    for j in range(n - i - 1):
        inner = 0
        for m in range(n - i - j - 1):
            inner += comb(n + m + i - j + 1, n - i - j - m - 2) * ballot_coeff(
                m, 2 * i + 4
            )
        total += (-1) ** j * inner
    return total


def stat_formula(stat: str, n: int, i: int) -> int:
    if stat not in FORMULA_STATS:
        raise DomainViolation(
            f"no explicit formula for {stat!r}; formulas exist for "
            + ", ".join(FORMULA_STATS)
        )
    if n < 0 or i < 0 or i > n:
        return 0
    if stat == "U":
        return _u_formula(n, i)
    if stat == "H":
        return _h_formula(n, i)
    if i == 0:
        if n == 0:
            return 1
        return (
            _schroder_number(n, DEFAULT_ORDER)
            + _u_formula(n - 1, 0)
            + _h_formula(n - 1, 0)
        )
    return _p_formula_shifted(n - 1, i - 1)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

_METHODS = {
    "brute": stat_brute,
    "riordan": stat_riordan,
    "formula": stat_formula,
}


@dataclass(frozen=True)
class StatTable:
    stat: str
    method: str
    n_max: int
    rows: tuple[tuple[int, ...], ...]


def methods_for(stat: str) -> tuple[str, ...]:
    _check_stat(stat)
    if stat in FORMULA_STATS:
        return ("brute", "riordan", "formula")
    return ("brute", "riordan")


def stat_table(stat: str, method: str, n_max: int) -> StatTable:
    _check_stat(stat)
    if method not in _METHODS:
        raise DomainViolation(
            f"unknown method {method!r}; choose from " + ", ".join(_METHODS)
        )
    if method == "formula" and stat not in FORMULA_STATS:
        raise DomainViolation(f"no explicit formula for {stat!r}")
    fn = _METHODS[method]
    rows = tuple(
        tuple(fn(stat, n, i) for i in range(n + 1)) for n in range(n_max + 1)
    )
    return StatTable(stat, method, n_max, rows)
