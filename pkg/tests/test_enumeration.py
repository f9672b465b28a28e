"""Exhaustive generation and the exact counting formulas."""

import math

import pytest

from gpaths.enumeration import (
    MAX_N_DEFAULT,
    MAX_N_UNRESTRICTED_GMOTZKIN,
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
    size_cap,
    weighted_count,
)
from gpaths.errors import SizeLimitExceeded
from gpaths.paths import (
    BICOLORED_MOTZKIN,
    COLORED_DYCK,
    DYCK,
    GMOTZKIN,
    GMOTZKIN_UVU,
    HSTRING,
    MOTZKIN,
    PSI_IMAGE,
    SCHRODER,
    parse,
)
from gpaths.weights import Polynomial

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
MOTZKIN_NUMBERS = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
SCHRODER_NUMBERS = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586]
GFULL_COUNTS = [1, 2, 7, 29, 133, 650, 3319]


def test_dfs_order_is_frozen():
    assert list(iter_step_strings(DYCK, 4)) == ["uudd", "udud"]
    assert list(iter_step_strings(GMOTZKIN_UVU, 1)) == ["uv", "h"]
    assert list(iter_step_strings(GMOTZKIN_UVU, 2)) == [
        "uuvv",
        "uhv",
        "uvh",
        "ud",
        "huv",
        "hh",
    ]
    assert list(iter_step_strings(MOTZKIN, 3)) == ["uhd", "udh", "hud", "hhh"]
    assert list(iter_step_strings(PSI_IMAGE, 1)) == ["a", "A"]
    assert list(iter_step_strings(PSI_IMAGE, 2)) == [
        "aa",
        "aA",
        "ab",
        "Aa",
        "AA",
        "Ab",
    ]


def test_counts_match_classical_sequences():
    for n, expect in enumerate(CATALAN[:7]):
        assert count_paths(DYCK, 2 * n, max_n_override=13) == expect
        assert count_paths(DYCK, 2 * n + 1, max_n_override=13) == 0
    for n, expect in enumerate(MOTZKIN_NUMBERS[:8]):
        assert count_paths(MOTZKIN, n) == expect
    for n, expect in enumerate(SCHRODER_NUMBERS[:6]):
        assert count_paths(SCHRODER, 2 * n) == expect
        assert count_paths(GMOTZKIN_UVU, n) == expect
        assert count_paths(COLORED_DYCK, 2 * n) == expect
    # bicolored Motzkin paths are counted by the shifted Catalan numbers
    for n in range(7):
        assert count_paths(BICOLORED_MOTZKIN, n) == CATALAN[n + 1]
    for n in range(8):
        assert count_paths(HSTRING, n) == 2**n
    for n, expect in enumerate(GFULL_COUNTS):
        assert count_paths(GMOTZKIN, n) == expect
    # the prefix constraint forbids the empty path
    assert count_paths(PSI_IMAGE, 0) == 0
    assert list(iter_step_strings(PSI_IMAGE, 0)) == []
    assert weighted_count(PSI_IMAGE, 0, "psi_image_ab") == Polynomial()


def test_generated_paths_all_validate():
    for family in (GMOTZKIN_UVU, SCHRODER, COLORED_DYCK, PSI_IMAGE):
        for n in range(5):
            for path in generate(family, n):
                assert parse(path.steps, family) == path


def test_weighted_count_literals():
    a, b, c = Polynomial.var("a"), Polynomial.var("b"), Polynomial.var("c")
    assert weighted_count(GMOTZKIN_UVU, 0, "gmotzkin_abc") == Polynomial.const(1)
    assert weighted_count(GMOTZKIN_UVU, 1, "gmotzkin_abc") == a + b
    assert (
        weighted_count(GMOTZKIN_UVU, 2, "gmotzkin_abc")
        == a * a + 3 * a * b + b * b + c
    )
    assert weighted_count(HSTRING, 3, "hstring_ab") == (a + b) ** 3


def test_guvu_recurrence_matches_enumeration():
    a, b, c = Polynomial.var("a"), Polynomial.var("b"), Polynomial.var("c")
    g = guvu_coeffs(6)
    assert g[3] == (
        a**3 + 6 * a**2 * b + 7 * a * b**2 + 2 * b**3 + 3 * a * c + 3 * b * c
    )
    for n in range(7):
        assert g[n] == weighted_count(GMOTZKIN_UVU, n, "gmotzkin_abc")
        assert g[n].eval_at(1, 1, 1) == SCHRODER_NUMBERS[n]


def test_gfull_recurrence_matches_enumeration():
    g = gfull_coeffs(6)
    for n in range(7):
        assert g[n] == weighted_count(GMOTZKIN, n, "gmotzkin_abc")
        assert g[n].eval_at(1, 1, 1) == GFULL_COUNTS[n]


def test_prop21_both_variants_match_recurrence():
    g = guvu_coeffs(6)
    for n in range(7):
        assert prop21(n, "first") == g[n]
        assert prop21(n, "second") == g[n]
    with pytest.raises(ValueError):
        prop21(3, "third")


def test_catalan_number_values():
    assert [catalan_number(k) for k in range(11)] == CATALAN


def test_closed_form_literals():
    a, b = Polynomial.var("a"), Polynomial.var("b")
    assert closed_form("dyck_ab", 3) == a**3 + 3 * a**2 * b + a * b**2
    assert closed_form("motzkin_ab", 4) == a**4 + 6 * a**2 * b + 2 * b**2
    assert closed_form("schroder_ab", 2) == a**2 + 3 * a * b + 2 * b**2
    assert closed_form("little_schroder_ab", 2) == a * b + 2 * b**2
    for name in ("dyck_ab", "motzkin_ab", "schroder_ab", "little_schroder_ab"):
        assert closed_form(name, 0) == Polynomial.const(1)
    with pytest.raises(ValueError):
        closed_form("narayana", 3)
    with pytest.raises(ValueError):
        closed_form("dyck_ab", -1)


def test_closed_forms_match_enumeration():
    for n in range(7):
        assert closed_form("motzkin_ab", n).eval_at(1, 1, 0) == MOTZKIN_NUMBERS[n]
        assert closed_form("schroder_ab", n).eval_at(1, 1, 0) == SCHRODER_NUMBERS[n]
        assert closed_form("dyck_ab", n) == weighted_count(
            DYCK, 2 * n, "dyck_peak_ab", max_n_override=12
        )
        assert closed_form("schroder_ab", n) == weighted_count(
            SCHRODER, 2 * n, "schroder_ab", max_n_override=12
        )


def test_gbinom_extends_binomials():
    for r in range(8):
        for m in range(10):
            assert gbinom(r, m) == math.comb(r, m)
    assert gbinom(-1, 2) == 1
    assert gbinom(-2, 3) == -4
    assert gbinom(-3, 0) == 1
    assert gbinom(5, -1) == 0


def test_ballot_coeff_against_closed_form():
    assert ballot_coeff(2, 3) == 9
    assert ballot_coeff(3, 2) == 14
    assert ballot_coeff(0, 0) == 1
    assert ballot_coeff(-1, 2) == 0
    for m in range(8):
        for k in range(8):
            assert ballot_coeff(m, k) == ballot_closed_form(m, k)


def test_size_guard():
    assert size_cap(DYCK) == MAX_N_DEFAULT
    assert size_cap(GMOTZKIN) == MAX_N_UNRESTRICTED_GMOTZKIN
    assert size_cap(GMOTZKIN_UVU) == MAX_N_DEFAULT
    assert size_cap(DYCK, max_n_override=30) == 30
    with pytest.raises(SizeLimitExceeded):
        count_paths(DYCK, MAX_N_DEFAULT + 1)
    with pytest.raises(SizeLimitExceeded):
        next(iter_step_strings(GMOTZKIN, MAX_N_UNRESTRICTED_GMOTZKIN + 1))
    with pytest.raises(SizeLimitExceeded):
        weighted_count(GMOTZKIN_UVU, MAX_N_DEFAULT + 1, "gmotzkin_abc")
    assert count_paths(DYCK, 14, max_n_override=14) == CATALAN[7]


def test_size_guard_env_override(monkeypatch):
    monkeypatch.setenv("GPATHS_MAX_N", "5")
    assert size_cap(DYCK) == 5
    with pytest.raises(SizeLimitExceeded):
        count_paths(DYCK, 6)
    assert count_paths(DYCK, 4) == 2
