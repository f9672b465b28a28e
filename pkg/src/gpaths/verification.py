"""Cross-checking suites: every formula against enumeration and each other.

Each check compares two or more independently computed values: exhaustive
enumeration against recurrences, closed forms against substitution
identities, bijections against round trips, weight preservation and image
sets, statistic tables against their frozen reference rows.  The frozen
sequences and tables below are the reference data; nothing in here derives
them from the code under test.

The four suites (counts, bijections, stats, identities) power both the CLI
verify subcommand and the acceptance test module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bijections as bij
from .enumeration import (
    ballot_closed_form,
    ballot_coeff,
    closed_form,
    count_paths,
    guvu_coeffs,
    iter_step_strings,
    prop21,
    weighted_count,
)
from .paths import (
    BICOLORED_MOTZKIN,
    COLORED_DYCK,
    DYCK,
    GMOTZKIN,
    GMOTZKIN_UVU,
    HSTRING,
    MOTZKIN,
    PSI_IMAGE,
    SCHRODER,
    STEP_GEOMETRY,
    Path,
    PathFamily,
    parse,
)
from .series import guvu_series_at
from .stats import methods_for, stat_brute, stat_formula, stat_riordan, stat_table
from .weights import Polynomial, weight_exponents

A = Polynomial.var("a")
B = Polynomial.var("b")
PZERO = Polynomial()

# ---------------------------------------------------------------------------
# frozen reference data
# ---------------------------------------------------------------------------

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)
MOTZKIN_NUMBERS = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188)
SCHRODER_NUMBERS = (
    1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718,
)
LITTLE_SCHRODER_NUMBERS = (
    1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859,
)
# weighted counts at (1,0,2) and (-3,4,16)
SEQ_A025235 = (1, 1, 3, 7, 21, 61, 191, 603, 1961, 6457, 21595)
SEQ_A059231 = (1, 1, 5, 29, 185, 1257, 8925, 65445, 491825, 3768209, 29324405)

GOLDEN_U = (
    (1,),
    (5, 1),
    (25, 9, 1),
    (121, 61, 13, 1),
    (593, 369, 113, 17, 1),
    (2941, 2121, 825, 181, 21, 1),
    (14777, 11881, 5489, 1553, 265, 25, 1),
)
GOLDEN_V = (
    (1,),
    (4, 1),
    (20, 8, 1),
    (96, 52, 12, 1),
    (472, 308, 100, 16, 1),
    (2348, 1752, 712, 164, 20, 1),
    (11836, 9760, 4664, 1372, 244, 24, 1),
)
GOLDEN_H = (
    (1,),
    (4, 1),
    (16, 8, 1),
    (68, 48, 12, 1),
    (304, 264, 96, 16, 1),
    (1412, 1408, 652, 160, 20, 1),
    (6752, 7432, 4080, 1296, 240, 24, 1),
)
GOLDEN_P = (
    (1,),
    (4, 1),
    (15, 7, 1),
    (63, 42, 11, 1),
    (279, 230, 86, 15, 1),
    (1291, 1226, 578, 146, 19, 1),
    (6159, 6470, 3598, 1166, 222, 23, 1),
)
# the d-step table coincides with the u-step table by matching-step transfer
GOLDEN_TABLES = {
    "U": GOLDEN_U,
    "V": GOLDEN_V,
    "D": GOLDEN_U,
    "H": GOLDEN_H,
    "P": GOLDEN_P,
}

FIGURE_SIGMA_IN = "uuuvhudvvhuuuuuvdvvvud"
FIGURE_SIGMA_OUT = "uduudHuudddHuduuduuudddduudd"
FIGURE_THETA_IN = "uhhhuhuhhuhuvhvvuddvhhhuhhuhvuvdhuhd"
FIGURE_THETA_OUT = "uaabuuaubaddbbddaaabuaudbdabud"
FIGURE_PIPE_IN = "huhvuhdhuhuhuduvdv"
FIGURE_PIPE_MID = "audbudaububbbdd"
FIGURE_PIPE_OUT = "uuduuddduudduduuudduuuuudddddd"
PHI_EXAMPLE_IN = "uduuDuduuuDddduD"
PHI_EXAMPLE_OUT = "uduHuduuHdddH"

# Dyck/Schroder semilength 10 means x-length 20, past the default guard;
# every enumeration here is still desk scale (about a million paths at worst).
_CAP = 24


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f": {self.detail}" if self.detail and not self.ok else ""
        return f"{status} {self.name}{suffix}"


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(ok), detail)


# ---------------------------------------------------------------------------
# criterion 1: statistic tables by every route
# ---------------------------------------------------------------------------


def check_stat_tables(n_max: int = 6) -> list[CheckResult]:
    results = []
    for stat, golden in GOLDEN_TABLES.items():
        want = tuple(row for row in golden[: n_max + 1])
        for method in methods_for(stat):
            got = stat_table(stat, method, n_max).rows
            results.append(
                _check(
                    f"stat table {stat} via {method} matches reference rows 0..{n_max}",
                    got == want,
                    f"got {got}",
                )
            )
    return results


# ---------------------------------------------------------------------------
# criterion 2: the weighted counts against their specializations
# ---------------------------------------------------------------------------


def check_weighted_counts(n_max: int = 10) -> list[CheckResult]:
    results = []
    g = guvu_coeffs(n_max)

    brute = {
        "catalan": [
            count_paths(DYCK, 2 * n, _CAP) for n in range(n_max + 1)
        ],
        "motzkin": [count_paths(MOTZKIN, n, _CAP) for n in range(n_max + 1)],
        "schroder": [
            count_paths(SCHRODER, 2 * n, _CAP) for n in range(n_max + 1)
        ],
    }
    results.append(
        _check(
            f"brute Dyck counts match the Catalan numbers up to n={n_max}",
            brute["catalan"] == list(CATALAN[: n_max + 1]),
            f"got {brute['catalan']}",
        )
    )
    results.append(
        _check(
            f"brute Motzkin counts match the Motzkin numbers up to n={n_max}",
            brute["motzkin"] == list(MOTZKIN_NUMBERS[: n_max + 1]),
            f"got {brute['motzkin']}",
        )
    )
    results.append(
        _check(
            f"brute Schroder counts match the Schroder numbers up to n={n_max}",
            brute["schroder"] == list(SCHRODER_NUMBERS[: n_max + 1]),
            f"got {brute['schroder']}",
        )
    )

    for triple, seq, label in (
        ((0, 1, 1), CATALAN, "(0,1,1) gives the Catalan numbers"),
        ((1, 0, 1), MOTZKIN_NUMBERS, "(1,0,1) gives the Motzkin numbers"),
        ((1, 1, 1), SCHRODER_NUMBERS, "(1,1,1) gives the Schroder numbers"),
        ((1, 0, 2), SEQ_A025235, "(1,0,2) gives the A025235 sequence"),
        ((-3, 4, 16), SEQ_A059231, "(-3,4,16) gives the A059231 sequence"),
    ):
        got = [g[n].eval_at(*triple) for n in range(n_max + 1)]
        results.append(
            _check(
                f"recurrence at {label}",
                got == [Fraction(x) for x in seq[: n_max + 1]],
                f"got {got}",
            )
        )

    # brute enumeration of the weighted family itself, symbolically (small n)
    sym_max = min(n_max, 8)
    sym_ok = all(
        weighted_count(GMOTZKIN_UVU, n, "gmotzkin_abc", _CAP) == g[n]
        for n in range(sym_max + 1)
    )
    results.append(
        _check(
            f"recurrence equals the enumerated weight polynomial up to n={sym_max}",
            sym_ok,
        )
    )

    for variant in ("first", "second"):
        ok = all(prop21(n, variant) == g[n] for n in range(n_max + 1))
        results.append(
            _check(
                f"{variant} explicit triple sum equals the recurrence up to n={n_max}",
                ok,
            )
        )

    for triple in ((1, 0, 2), (-3, 4, 16)):
        series = guvu_series_at(*triple, order=n_max)
        ok = all(
            series.coeff(n) == g[n].eval_at(*triple) for n in range(n_max + 1)
        )
        results.append(
            _check(
                f"composite-series route agrees at weights {triple}",
                ok,
            )
        )
    return results


# ---------------------------------------------------------------------------
# criterion 3: bijection certification
# ---------------------------------------------------------------------------

_WEIGHTING_OF = {
    "gmotzkin": "gmotzkin_ab_bsq",
    "schroder": "schroder_ab",
    "dyck": "dyck_peak_ab",
    "colored_dyck": "dyck_peak_ab",
    "bicolored_motzkin": "bicolored_motzkin_ab",
    "hstring": "hstring_ab",
    "psi_image": "psi_image_ab",
}

_path_set_cache: dict = {}


def _path_set(family: PathFamily, n: int) -> frozenset[str]:
    key = (family, n)
    if key not in _path_set_cache:
        _path_set_cache[key] = frozenset(iter_step_strings(family, n, _CAP))
    return _path_set_cache[key]


def _certify(
    name: str,
    forward,
    inverse,
    domain: PathFamily,
    sizes,
    codomain_of,
) -> list[CheckResult]:
    """Round trip, weight preservation, and image-set equality."""
    w_dom = _WEIGHTING_OF[domain.base]
    ok_round = True
    ok_weight = True
    ok_image = True
    detail = ""
    for n in sizes:
        images = []
        for steps in iter_step_strings(domain, n, _CAP):
            image = forward(Path(domain, steps))
            back = inverse(image)
            if back.steps != steps:
                ok_round = False
                detail = detail or f"round trip fails at {steps!r} -> {image.steps!r} -> {back.steps!r}"
            w_img = _WEIGHTING_OF[image.family.base]
            if weight_exponents(steps, w_dom, domain.base) != weight_exponents(
                image.steps, w_img, image.family.base
            ):
                ok_weight = False
                detail = detail or f"weight not preserved at {steps!r}"
            images.append(image.steps)
        image_set = frozenset(images)
        if len(image_set) != len(images):
            ok_image = False
            detail = detail or f"forward map not injective at n={n}"
        want = codomain_of(n)
        if image_set != want:
            ok_image = False
            missing = sorted(want - image_set)[:3]
            extra = sorted(image_set - want)[:3]
            detail = detail or (
                f"image set differs at n={n}: missing {missing}, extra {extra}"
            )
    nmax = max(sizes)
    return [
        _check(f"{name} round trip is the identity up to n={nmax}", ok_round, detail),
        _check(f"{name} preserves the step weights up to n={nmax}", ok_weight, detail),
        _check(f"{name} maps onto its codomain up to n={nmax}", ok_image, detail),
    ]


def _schroder_vartheta_domain(n: int) -> frozenset[str]:
    out = []
    for p in _path_set(SCHRODER, 2 * n):
        if not p.startswith("ud"):
            continue
        level = 0
        for c in p:
            if c == "H" and level == 0:
                out.append(p)
                break
            level += STEP_GEOMETRY[c][1]
    return frozenset(out)


def _schroder_vartheta_codomain(n: int) -> frozenset[str]:
    out = []
    for p in _path_set(SCHRODER, 2 * n):
        if not p.startswith("H") or not p.endswith("d"):
            continue
        level = 0
        ok = True
        for c in p[1:]:
            if c == "H" and level == 0:
                ok = False
                break
            level += STEP_GEOMETRY[c][1]
        if ok:
            out.append(p)
    return frozenset(out)


def check_bijections(n_max: int = 8, theta_n_max: int = 10) -> list[CheckResult]:
    results = []

    results += _certify(
        "sigma",
        bij.sigma,
        bij.sigma_inv,
        GMOTZKIN_UVU,
        range(n_max + 1),
        lambda n: _path_set(SCHRODER, 2 * n),
    )
    results.append(
        _check(
            "sigma reproduces the worked 15-step example",
            bij.sigma(parse(FIGURE_SIGMA_IN, GMOTZKIN_UVU)).steps
            == FIGURE_SIGMA_OUT,
        )
    )

    results += _certify(
        "theta",
        bij.theta,
        bij.theta_inv,
        bij.GMOTZKIN_UVU_UU,
        range(theta_n_max + 1),
        lambda n: _path_set(BICOLORED_MOTZKIN, n),
    )
    results.append(
        _check(
            "theta reproduces the worked 30-step example",
            bij.theta(parse(FIGURE_THETA_IN, bij.GMOTZKIN_UVU_UU)).steps
            == FIGURE_THETA_OUT,
        )
    )

    results += _certify(
        "phi_peak",
        bij.phi_peak,
        bij.phi_peak_inv,
        COLORED_DYCK,
        [2 * n for n in range(n_max + 1)],
        lambda m: _path_set(SCHRODER, m),
    )
    results.append(
        _check(
            "phi_peak reproduces the worked example",
            bij.phi_peak(parse(PHI_EXAMPLE_IN, COLORED_DYCK)).steps
            == PHI_EXAMPLE_OUT,
        )
    )

    vartheta_results = []
    ok_round = ok_weight = ok_image = True
    detail = ""
    for n in range(1, n_max + 1):
        domain = _schroder_vartheta_domain(n)
        images = set()
        for p in sorted(domain):
            q = bij.vartheta(Path(SCHRODER, p))
            back = bij.vartheta_inv(q)
            if back.steps != p:
                ok_round = False
                detail = detail or f"vartheta round trip fails at {p!r}"
            if weight_exponents(p, "schroder_ab", "schroder") != weight_exponents(
                q.steps, "schroder_ab", "schroder"
            ):
                ok_weight = False
                detail = detail or f"vartheta weight fails at {p!r}"
            images.add(q.steps)
        if images != _schroder_vartheta_codomain(n):
            ok_image = False
            detail = detail or f"vartheta image set differs at n={n}"
    vartheta_results.append(
        _check(f"vartheta round trip is the identity up to n={n_max}", ok_round, detail)
    )
    vartheta_results.append(
        _check(f"vartheta preserves the step weights up to n={n_max}", ok_weight, detail)
    )
    vartheta_results.append(
        _check(f"vartheta maps onto its codomain up to n={n_max}", ok_image, detail)
    )
    results += vartheta_results
    results.append(
        _check(
            "vartheta reproduces the three worked examples",
            bij.vartheta(Path(SCHRODER, "udH")).steps == "Hud"
            and bij.vartheta(Path(SCHRODER, "udHH")).steps == "HuHd"
            and bij.vartheta(Path(SCHRODER, "uduuddH")).steps == "Huuddud",
        )
    )

    results += _certify(
        "rho",
        bij.rho,
        bij.rho_inv,
        bij.GMOTZKIN_UVU_UU_HU,
        range(n_max + 1),
        lambda n: _path_set(HSTRING, n),
    )
    results.append(
        _check(
            "rho reproduces the worked examples",
            bij.rho(parse("hh", bij.GMOTZKIN_UVU_UU_HU)).steps == "aa"
            and bij.rho(parse("uv", bij.GMOTZKIN_UVU_UU_HU)).steps == "b"
            and bij.rho(parse("uhd", bij.GMOTZKIN_UVU_UU_HU)).steps == "bab",
        )
    )

    results += _certify(
        "varphi",
        bij.varphi,
        bij.varphi_inv,
        bij.VARPHI_DOMAIN,
        range(1, n_max + 1),
        lambda n: _path_set(DYCK, 2 * n),
    )
    results.append(
        _check(
            "varphi reproduces its base cases and the worked example",
            bij.varphi(parse("a", bij.VARPHI_DOMAIN)).steps == "ud"
            and bij.varphi(parse("aa", bij.VARPHI_DOMAIN)).steps == "udud"
            and bij.varphi(parse("ab", bij.VARPHI_DOMAIN)).steps == "uudd"
            and bij.varphi(parse("aud", bij.VARPHI_DOMAIN)).steps == "uduudd",
        )
    )
    results.append(
        _check(
            "theta then varphi reproduces the worked 15-step pipeline",
            bij.theta(parse(FIGURE_PIPE_IN, bij.GMOTZKIN_UVU_UU)).steps
            == FIGURE_PIPE_MID
            and bij.varphi(parse(FIGURE_PIPE_MID, bij.VARPHI_DOMAIN)).steps
            == FIGURE_PIPE_OUT,
        )
    )

    results += _certify(
        "psi",
        bij.psi,
        bij.psi_inv,
        GMOTZKIN_UVU,
        range(1, n_max + 1),
        lambda n: _path_set(PSI_IMAGE, n),
    )
    results.append(
        _check(
            "psi sends the length-1 paths to the two flavored marks",
            bij.psi(parse("h", GMOTZKIN_UVU)).steps == "a"
            and bij.psi(parse("uv", GMOTZKIN_UVU)).steps == "A",
        )
    )

    results += _certify(
        "varphi_theta",
        bij.varphi_theta,
        bij.varphi_theta_inv,
        bij.VARPHI_THETA_DOMAIN,
        range(1, n_max + 1),
        lambda n: _path_set(DYCK, 2 * n),
    )
    return results


# ---------------------------------------------------------------------------
# criterion 4: polynomial identities
# ---------------------------------------------------------------------------


def check_identities(n_max: int = 8) -> list[CheckResult]:
    results = []

    anchors_ok = all(
        closed_form("dyck_ab", n)
        == weighted_count(DYCK, 2 * n, "dyck_peak_ab", _CAP)
        and closed_form("motzkin_ab", n)
        == weighted_count(MOTZKIN, n, "motzkin_ab", _CAP)
        and closed_form("schroder_ab", n)
        == weighted_count(SCHRODER, 2 * n, "schroder_ab", _CAP)
        and closed_form("little_schroder_ab", n)
        == weighted_count(SCHRODER.restricted(), 2 * n, "schroder_ab", _CAP)
        for n in range(n_max + 1)
    )
    results.append(
        _check(
            f"closed forms equal the enumerated weight polynomials up to n={n_max}",
            anchors_ok,
        )
    )

    ok12 = all(
        closed_form("schroder_ab", n)
        == closed_form("dyck_ab", n).subs(A + B, B, PZERO)
        for n in range(n_max + 1)
    ) and all(
        closed_form("schroder_ab", n)
        == (A + B) * closed_form("motzkin_ab", n - 1).subs(
            A + 2 * B, (A + B) * B, PZERO
        )
        for n in range(1, n_max + 1)
    )
    results.append(
        _check(
            f"S_n(a,b) = C_n(a+b,b) = (a+b) M_(n-1)(a+2b,(a+b)b) up to n={n_max}",
            ok12,
        )
    )

    ok23 = all(
        B * closed_form("schroder_ab", n)
        == (A + B) * closed_form("little_schroder_ab", n)
        for n in range(1, n_max + 1)
    )
    results.append(
        _check(f"b S_n(a,b) = (a+b) s_n(a,b) up to n={n_max}", ok23)
    )

    little_counts_ok = all(
        closed_form("little_schroder_ab", n).eval_at(1, 1)
        == count_paths(SCHRODER.restricted(), 2 * n, _CAP)
        == LITTLE_SCHRODER_NUMBERS[n]
        for n in range(n_max + 1)
    )
    results.append(
        _check(
            f"s_n(1,1) equals the axis-horizontal-free Schroder count up to n={n_max}",
            little_counts_ok,
        )
    )

    ok_tau = True
    for n in range(n_max + 1):
        want = (A + B) ** n
        got1 = weighted_count(
            GMOTZKIN.avoiding("uvu", "uu", "uh"), n, "gmotzkin_ab_bsq", _CAP
        )
        got2 = weighted_count(
            GMOTZKIN.avoiding("uvu", "uu", "hu"), n, "gmotzkin_ab_bsq", _CAP
        )
        if got1 != want or got2 != want:
            ok_tau = False
    results.append(
        _check(
            f"both tau-restricted weighted counts equal (a+b)^n up to n={n_max}",
            ok_tau,
        )
    )

    ok34 = all(
        A * closed_form("motzkin_ab", n).subs(A + B, A * B, PZERO)
        == closed_form("dyck_ab", n + 1)
        for n in range(n_max + 1)
    ) and all(
        weighted_count(bij.VARPHI_DOMAIN, n + 1, "bicolored_motzkin_ab", _CAP)
        == closed_form("dyck_ab", n + 1)
        for n in range(n_max + 1)
    )
    results.append(
        _check(
            f"a M_n(a+b,ab) = C_(n+1)(a,b), also as the marked-prefix count, up to n={n_max}",
            ok34,
        )
    )
    return results


# ---------------------------------------------------------------------------
# criterion 5: statistic identities by brute force
# ---------------------------------------------------------------------------


def check_stat_identities(n_max: int = 6) -> list[CheckResult]:
    results = []
    ok_d = all(
        stat_brute("D", n, i) == stat_brute("U", n, i)
        for n in range(n_max + 1)
        for i in range(n + 1)
    )
    results.append(
        _check(f"d-step counts equal u-step counts up to n={n_max}", ok_d)
    )

    ok_v = all(
        stat_brute("V", n, i) == stat_brute("U", n, i) - stat_brute("U", n - 1, i)
        for n in range(n_max + 1)
        for i in range(n + 1)
    )
    results.append(
        _check(
            f"v-step counts are the difference of consecutive u-step rows up to n={n_max}",
            ok_v,
        )
    )

    ok_cons = all(
        stat_brute("U", n, i)
        == stat_brute("V", n, i) + stat_brute("D", n - 1, i)
        for n in range(n_max + 1)
        for i in range(n + 1)
    )
    results.append(
        _check(
            f"every u-step is closed by a v or a d: U = V + D-shift up to n={n_max}",
            ok_cons,
        )
    )

    ok_h0 = all(
        stat_brute("H", n, 0)
        == SCHRODER_NUMBERS[n + 1] - SCHRODER_NUMBERS[n]
        for n in range(n_max + 1)
    )
    results.append(
        _check(
            f"axis h-step counts are Schroder differences up to n={n_max}", ok_h0
        )
    )

    ok_p0 = all(
        stat_brute("P", n + 1, 0)
        == SCHRODER_NUMBERS[n + 1] + stat_brute("U", n, 0) + stat_brute("H", n, 0)
        for n in range(n_max)
    )
    results.append(
        _check(
            f"axis point counts decompose over returns up to n={n_max}", ok_p0
        )
    )
    return results


# ---------------------------------------------------------------------------
# criterion 6: restricted statistics, brute against Riordan
# ---------------------------------------------------------------------------


def check_restricted_stats(n_max: int = 6) -> list[CheckResult]:
    results = []
    for stat in ("u_r", "v_r", "d_r", "h_r", "p_r"):
        ok = True
        detail = ""
        for n in range(n_max + 1):
            for i in range(n + 1):
                b = stat_brute(stat, n, i)
                r = stat_riordan(stat, n, i)
                if b != r:
                    ok = False
                    detail = detail or f"{stat}({n},{i}): brute {b}, riordan {r}"
        results.append(
            _check(
                f"restricted {stat} brute equals Riordan up to n={n_max}",
                ok,
                detail,
            )
        )
    return results


# ---------------------------------------------------------------------------
# criterion 7: ballot numbers
# ---------------------------------------------------------------------------


def check_ballot(m_max: int = 12, k_max: int = 15) -> list[CheckResult]:
    results = []
    ok = all(
        ballot_coeff(m, k) == ballot_closed_form(m, k)
        for m in range(m_max + 1)
        for k in range(k_max + 1)
    )
    results.append(
        _check(
            f"series and closed-form ballot numbers agree for m<={m_max}, k<={k_max}",
            ok,
        )
    )
    ok_table = all(
        stat_formula("U", n, i) == GOLDEN_U[n][i]
        for n in range(7)
        for i in range(n + 1)
    )
    results.append(
        _check(
            "the alternating ballot sum reproduces the u-step reference table",
            ok_table,
        )
    )
    return results


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _counts_suite(n_max: int | None) -> list[CheckResult]:
    results = check_weighted_counts(10 if n_max is None else n_max)
    results += check_ballot()
    return results


def _bijections_suite(n_max: int | None) -> list[CheckResult]:
    if n_max is None:
        return check_bijections()
    return check_bijections(n_max, theta_n_max=max(n_max, 1))


def _stats_suite(n_max: int | None) -> list[CheckResult]:
    n = 6 if n_max is None else min(n_max, 6)
    return (
        check_stat_tables(n) + check_stat_identities(n) + check_restricted_stats(n)
    )


def _identities_suite(n_max: int | None) -> list[CheckResult]:
    return check_identities(8 if n_max is None else n_max)


SUITES = {
    "counts": _counts_suite,
    "bijections": _bijections_suite,
    "stats": _stats_suite,
    "identities": _identities_suite,
}


def run_suite(name: str, n_max: int | None = None) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite in ("counts", "bijections", "stats", "identities"):
            results.extend(run_suite(suite, n_max))
        return results
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; choose from all, " + ", ".join(SUITES)
        ) from None
    return fn(n_max)
