"""The weight-preserving bijections between the path families.

Every map is a recursive rewrite driven by a case analysis on the head or
tail of the word; the case taken at each recursion level can be recorded
in a trace list (labels "C1".."C5" and "base").  The public functions take
and return validated Path objects and raise FamilyMismatch / DomainViolation
on bad inputs; the underscore forms work on raw step strings.

Maps and their domains:

  sigma        uvu-avoiding gmotzkin  <->  schroder        (v,d) -> (d, dd)
  phi_peak     colored dyck           <->  schroder        colored peak <-> H
  vartheta     ud-prefixed schroder with an H on the axis
                                      <->  H-prefixed little schroder
  theta        {uvu,uu}-avoiding gmotzkin  <->  bicolored motzkin
  rho          {uvu,uu,hu}-avoiding gmotzkin  <->  two-letter strings
  varphi       a-prefixed bicolored motzkin  <->  dyck
  psi          uvu-avoiding gmotzkin  <->  flavored-image paths
               (the composite varphi^-1 after phi_peak^-1 after sigma)
  varphi_theta h-prefixed {uvu,uu}-avoiding gmotzkin  <->  dyck

In psi's image the two flavors of the marked horizontal letter (a/A) and
of the down step (d/D) remember which summand of the composite weight each
step carries, which is exactly the information needed to invert.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainViolation, EmptyPath, FamilyMismatch
from .paths import (
    BICOLORED_MOTZKIN,
    COLORED_DYCK,
    DYCK,
    GMOTZKIN,
    GMOTZKIN_UVU,
    HSTRING,
    PSI_IMAGE,
    SCHRODER,
    STEP_GEOMETRY,
    Path,
    PathFamily,
    _last_zero_before_end,
    is_primitive_str,
    match_index_str,
    nested_uv_decompose_str,
    last_primitive_suffix_str,
)

GMOTZKIN_UVU_UU = GMOTZKIN.avoiding("uvu", "uu")
GMOTZKIN_UVU_UU_HU = GMOTZKIN.avoiding("uvu", "uu", "hu")
VARPHI_DOMAIN = PathFamily("bicolored_motzkin", prefixes=("a",))
VARPHI_THETA_DOMAIN = PathFamily(
    "gmotzkin", avoid=("uu", "uvu"), prefixes=("h",)
)

Trace = Optional[list]


def _t(trace: Trace, label: str) -> None:
    if trace is not None:
        trace.append(label)


def _require_base(path: Path, base: str, who: str) -> None:
    if path.family.base != base:
        raise FamilyMismatch(
            f"{who} needs a {base} path, got {path.family.base}"
        )


def _forbid(steps: str, patterns: tuple[str, ...], who: str) -> None:
    for pattern in patterns:
        if pattern in steps:
            raise DomainViolation(
                f"{who} needs a path avoiding {pattern!r}"
            )


# ---------------------------------------------------------------------------
# sigma: uvu-avoiding gmotzkin -> schroder
# ---------------------------------------------------------------------------


def _sigma_fwd(q: str, trace: Trace = None) -> str:
    if q == "":
        _t(trace, "base")
        return ""
    if q[0] == "h":
        _t(trace, "C1")
        return "H" + _sigma_fwd(q[1:], trace)
    if q == "uv":
        _t(trace, "base")
        return "ud"
    if q.startswith("uvh"):
        _t(trace, "C2")
        return "udH" + _sigma_fwd(q[3:], trace)
    m = match_index_str(q, 0)
    if q[m] == "v":
        i, core, tail = nested_uv_decompose_str(q)
        j, odd = divmod(i, 2)
        if core and is_primitive_str(core):
            # maximality of i forces a primitive core to close with d
            _t(trace, "C3")
            sc = _sigma_fwd(core, trace)
            st = _sigma_fwd(tail, trace)
            if odd:
                return "udu" * j + "ud" + sc + "d" * j + st
            return "u" + "udu" * (j - 1) + "ud" + sc + "d" * j + st
        _t(trace, "C4")
        sc = _sigma_fwd(core, trace)
        st = _sigma_fwd(tail, trace)
        if odd:
            return "u" + "udu" * j + sc + "d" * (j + 1) + st
        return "udu" * j + sc + "d" * j + st
    # the leading u is matched by a d: its weight c = b^2 splits in two
    _t(trace, "C5")
    return "uu" + _sigma_fwd(q[1:m], trace) + "dd" + _sigma_fwd(q[m + 1 :], trace)


def _sigma_inv(p: str, trace: Trace = None) -> str:
    if p == "":
        _t(trace, "base")
        return ""
    if p[0] == "H":
        _t(trace, "C1")
        return "h" + _sigma_inv(p[1:], trace)
    m = match_index_str(p, 0)
    inner = p[1:m]
    rest = p[m + 1 :]
    if inner == "":
        if rest == "":
            _t(trace, "base")
            return "uv"
        if rest[0] == "H":
            _t(trace, "C2")
            return "uvh" + _sigma_inv(rest[1:], trace)
        _t(trace, "C3")
        m2 = match_index_str(rest, 0)
        return (
            "u"
            + _sigma_inv(rest[: m2 + 1], trace)
            + "v"
            + _sigma_inv(rest[m2 + 1 :], trace)
        )
    if is_primitive_str(inner):
        _t(trace, "C5")
        return "u" + _sigma_inv(inner[1:-1], trace) + "d" + _sigma_inv(rest, trace)
    _t(trace, "C4")
    return "u" + _sigma_inv(inner, trace) + "v" + _sigma_inv(rest, trace)


def sigma(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "gmotzkin", "sigma")
    _forbid(path.steps, ("uvu",), "sigma")
    return Path(SCHRODER, _sigma_fwd(path.steps, trace))


def sigma_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "schroder", "sigma_inv")
    return Path(GMOTZKIN_UVU, _sigma_inv(path.steps, trace))


# ---------------------------------------------------------------------------
# phi_peak: colored dyck <-> schroder
# ---------------------------------------------------------------------------


def _phi_fwd(p: str) -> str:
    out = []
    i = 0
    while i < len(p):
        if p[i] == "u" and i + 1 < len(p) and p[i + 1] == "D":
            out.append("H")
            i += 2
        else:
            out.append(p[i])
            i += 1
    return "".join(out)


def _phi_inv(p: str) -> str:
    return p.replace("H", "uD")


def phi_peak(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "colored_dyck", "phi_peak")
    _t(trace, "base")
    return Path(SCHRODER, _phi_fwd(path.steps))


def phi_peak_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "schroder", "phi_peak_inv")
    _t(trace, "base")
    return Path(COLORED_DYCK, _phi_inv(path.steps))


# ---------------------------------------------------------------------------
# vartheta: moves the leading ud past the first axis-level H
# ---------------------------------------------------------------------------


def _vartheta_fwd(p: str) -> str:
    if not p.startswith("ud"):
        raise DomainViolation("vartheta needs a path opening with ud")
    level = 0
    split = -1
    for idx in range(2, len(p)):
        c = p[idx]
        if c == "H" and level == 0:
            split = idx
            break
        level += STEP_GEOMETRY[c][1]
    if split < 0:
        raise DomainViolation("vartheta needs a horizontal step on the axis")
    return "H" + p[2:split] + "u" + p[split + 1 :] + "d"


def _vartheta_inv(p: str) -> str:
    if not p.startswith("H"):
        raise DomainViolation("vartheta_inv needs a path opening with H")
    prefix, arch = last_primitive_suffix_str(p)
    body = prefix[1:]
    level = 0
    for c in body:
        if c == "H" and level == 0:
            raise DomainViolation(
                "vartheta_inv needs no horizontal axis step after the first"
            )
        level += STEP_GEOMETRY[c][1]
    return "ud" + body + "H" + arch[1:-1]


def vartheta(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "schroder", "vartheta")
    _t(trace, "C1")
    return Path(SCHRODER, _vartheta_fwd(path.steps))


def vartheta_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "schroder", "vartheta_inv")
    _t(trace, "C1")
    return Path(SCHRODER, _vartheta_inv(path.steps))


# ---------------------------------------------------------------------------
# theta: {uvu,uu}-avoiding gmotzkin <-> bicolored motzkin
# ---------------------------------------------------------------------------


def _theta_fwd(q: str, trace: Trace = None) -> str:
    if q == "":
        _t(trace, "base")
        return ""
    if q[0] == "h":
        _t(trace, "C1")
        return "a" + _theta_fwd(q[1:], trace)
    if q.startswith("ud"):
        _t(trace, "C2")
        return "bb" + _theta_fwd(q[2:], trace)
    if q.startswith("uv"):
        if q == "uv":
            _t(trace, "base")
            return "b"
        # uvu is forbidden and a down step cannot follow at level 0
        _t(trace, "C4")
        return "ba" + _theta_fwd(q[3:], trace)
    # uu is forbidden, so the u is followed by h and the arch is nonempty
    m = match_index_str(q, 0)
    inner = q[2:m]
    tail = q[m + 1 :]
    if q[m] == "d":
        _t(trace, "C3")
        return "bu" + _theta_fwd(inner, trace) + "d" + _theta_fwd(tail, trace)
    _t(trace, "C5")
    return "u" + _theta_fwd(inner, trace) + "d" + _theta_fwd(tail, trace)


def _theta_inv(p: str, trace: Trace = None) -> str:
    if p == "":
        _t(trace, "base")
        return ""
    if p[0] == "a":
        _t(trace, "C1")
        return "h" + _theta_inv(p[1:], trace)
    if p == "b":
        _t(trace, "base")
        return "uv"
    if p[0] == "b":
        nxt = p[1]
        if nxt == "b":
            _t(trace, "C2")
            return "ud" + _theta_inv(p[2:], trace)
        if nxt == "a":
            _t(trace, "C4")
            return "uvh" + _theta_inv(p[2:], trace)
        _t(trace, "C3")
        m = match_index_str(p, 1)
        return (
            "uh"
            + _theta_inv(p[2:m], trace)
            + "d"
            + _theta_inv(p[m + 1 :], trace)
        )
    # leading u: the image of a v-closed arch; its interior may be empty
    _t(trace, "C5")
    m = match_index_str(p, 0)
    return "uh" + _theta_inv(p[1:m], trace) + "v" + _theta_inv(p[m + 1 :], trace)


def theta(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "gmotzkin", "theta")
    _forbid(path.steps, ("uvu", "uu"), "theta")
    return Path(BICOLORED_MOTZKIN, _theta_fwd(path.steps, trace))


def theta_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "bicolored_motzkin", "theta_inv")
    return Path(GMOTZKIN_UVU_UU, _theta_inv(path.steps, trace))


# ---------------------------------------------------------------------------
# rho: {uvu,uu,hu}-avoiding gmotzkin <-> words on two letters
# ---------------------------------------------------------------------------


def _rho_fwd(q: str, trace: Trace = None) -> str:
    if all(c == "h" for c in q):
        _t(trace, "C1")
        return "a" * len(q)
    if q.startswith("uv"):
        # hu-avoidance leaves only horizontal steps after a uv at the end
        _t(trace, "C2")
        return "b" + "a" * (len(q) - 2)
    if q[0] != "u":
        raise DomainViolation("rho needs blocks u h^i v, u h^j d or h^n")
    i = 1
    while i < len(q) and q[i] == "h":
        i += 1
    closer = q[i]
    if closer == "v":
        _t(trace, "C3")
        return "a" * (i - 1) + "b" + _rho_fwd(q[i + 1 :], trace)
    _t(trace, "C4")
    return "b" + "a" * (i - 1) + "b" + _rho_fwd(q[i + 1 :], trace)


def _rho_inv(s: str, trace: Trace = None) -> str:
    if "b" not in s:
        _t(trace, "C1")
        return "h" * len(s)
    if s[0] == "a":
        _t(trace, "C3")
        i = 0
        while s[i] == "a":
            i += 1
        return "u" + "h" * i + "v" + _rho_inv(s[i + 1 :], trace)
    if "b" not in s[1:]:
        _t(trace, "C2")
        return "uv" + "h" * (len(s) - 1)
    _t(trace, "C4")
    j = 1
    while s[j] == "a":
        j += 1
    return "u" + "h" * (j - 1) + "d" + _rho_inv(s[j + 1 :], trace)


def rho(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "gmotzkin", "rho")
    _forbid(path.steps, ("uvu", "uu", "hu"), "rho")
    return Path(HSTRING, _rho_fwd(path.steps, trace))


def rho_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "hstring", "rho_inv")
    return Path(GMOTZKIN_UVU_UU_HU, _rho_inv(path.steps, trace))


# ---------------------------------------------------------------------------
# varphi: a-prefixed bicolored motzkin <-> dyck, plain and flavored
# ---------------------------------------------------------------------------

# letter tables: the marked horizontal letters and the peak they encode,
# plus the down-step flavor created when a marked letter is stripped
_PLAIN_PEAK_OF = {"a": "ud"}
_COLORED_PEAK_OF = {"a": "uD", "A": "ud"}
_PLAIN_CLOSER_OF = {"a": "d"}
_COLORED_CLOSER_OF = {"a": "d", "A": "D"}
_PLAIN_MARK_OF = {"d": "a"}
_COLORED_MARK_OF = {"D": "a", "d": "A"}


def _varphi_fwd(q: str, colored: bool, trace: Trace = None) -> str:
    peak_of = _COLORED_PEAK_OF if colored else _PLAIN_PEAK_OF
    closer_of = _COLORED_CLOSER_OF if colored else _PLAIN_CLOSER_OF
    # the closing letter of an arch encodes the mark of its inner word
    mark_of_closer = {closer: mark for mark, closer in closer_of.items()}
    if len(q) == 1:
        if q not in peak_of:
            raise DomainViolation("varphi needs a path opening with the marked letter")
        _t(trace, "base")
        return peak_of[q]
    last = q[-1]
    if last in peak_of:
        _t(trace, "C1")
        return _varphi_fwd(q[:-1], colored, trace) + peak_of[last]
    if last == "b":
        _t(trace, "C2")
        return "u" + _varphi_fwd(q[:-1], colored, trace) + "d"
    # trailing down step: split off the arch it closes
    _t(trace, "C3")
    level = 0
    opener = -1
    for idx in range(len(q) - 1):
        if level == 0 and q[idx] == "u":
            opener = idx
        level += STEP_GEOMETRY[q[idx]][1]
    inner = q[opener + 1 : -1]
    return (
        _varphi_fwd(q[:opener], colored, trace)
        + "u"
        + _varphi_fwd(mark_of_closer[last] + inner, colored, trace)
        + "d"
    )


def _varphi_inv(p: str, colored: bool, trace: Trace = None) -> str:
    peak_of = _COLORED_PEAK_OF if colored else _PLAIN_PEAK_OF
    closer_of = _COLORED_CLOSER_OF if colored else _PLAIN_CLOSER_OF
    mark_of = _COLORED_MARK_OF if colored else _PLAIN_MARK_OF
    if len(p) == 2:
        _t(trace, "base")
        return mark_of[p[1]]
    if p[-2] == "u":
        # trailing peak
        _t(trace, "C1")
        return _varphi_inv(p[:-2], colored, trace) + mark_of[p[-1]]
    if is_primitive_str(p):
        _t(trace, "C2")
        return _varphi_inv(p[1:-1], colored, trace) + "b"
    _t(trace, "C3")
    split = _last_zero_before_end(p)
    inner = p[split + 1 : -1]
    w = _varphi_inv(inner, colored, trace)
    return (
        _varphi_inv(p[:split], colored, trace)
        + "u"
        + w[1:]
        + closer_of[w[0]]
    )


def varphi(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "bicolored_motzkin", "varphi")
    if not path.steps.startswith("a"):
        raise DomainViolation("varphi needs a path opening with the a-colored step")
    return Path(DYCK, _varphi_fwd(path.steps, False, trace))


def varphi_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "dyck", "varphi_inv")
    if not path.steps:
        raise EmptyPath("varphi_inv needs a nonempty path")
    return Path(VARPHI_DOMAIN, _varphi_inv(path.steps, False, trace))


# ---------------------------------------------------------------------------
# psi and the composite varphi_theta
# ---------------------------------------------------------------------------


def psi(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "gmotzkin", "psi")
    _forbid(path.steps, ("uvu",), "psi")
    if not path.steps:
        raise DomainViolation("psi needs x-length at least 1")
    schroder = _sigma_fwd(path.steps, trace)
    colored = _phi_inv(schroder)
    return Path(PSI_IMAGE, _varphi_inv(colored, True, trace))


def psi_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "psi_image", "psi_inv")
    colored = _varphi_fwd(path.steps, True, trace)
    return Path(GMOTZKIN_UVU, _sigma_inv(_phi_fwd(colored), trace))


def varphi_theta(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "gmotzkin", "varphi_theta")
    _forbid(path.steps, ("uvu", "uu"), "varphi_theta")
    if not path.steps.startswith("h"):
        raise DomainViolation("varphi_theta needs a path opening with h")
    return Path(DYCK, _varphi_fwd(_theta_fwd(path.steps, trace), False, trace))


def varphi_theta_inv(path: Path, trace: Trace = None) -> Path:
    _require_base(path, "dyck", "varphi_theta_inv")
    if not path.steps:
        raise EmptyPath("varphi_theta_inv needs a nonempty path")
    bicolored = _varphi_inv(path.steps, False, trace)
    return Path(VARPHI_THETA_DOMAIN, _theta_inv(bicolored, trace))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BijectionSpec:
    forward: Callable[[Path, Trace], Path]
    inverse: Callable[[Path, Trace], Path]
    domain: PathFamily
    codomain: PathFamily


BIJECTIONS: dict[str, BijectionSpec] = {
    "sigma": BijectionSpec(sigma, sigma_inv, GMOTZKIN_UVU, SCHRODER),
    "phi_peak": BijectionSpec(phi_peak, phi_peak_inv, COLORED_DYCK, SCHRODER),
    "vartheta": BijectionSpec(vartheta, vartheta_inv, SCHRODER, SCHRODER),
    "theta": BijectionSpec(theta, theta_inv, GMOTZKIN_UVU_UU, BICOLORED_MOTZKIN),
    "rho": BijectionSpec(rho, rho_inv, GMOTZKIN_UVU_UU_HU, HSTRING),
    "varphi": BijectionSpec(varphi, varphi_inv, VARPHI_DOMAIN, DYCK),
    "psi": BijectionSpec(psi, psi_inv, GMOTZKIN_UVU, PSI_IMAGE),
    "varphi_theta": BijectionSpec(
        varphi_theta, varphi_theta_inv, VARPHI_THETA_DOMAIN, DYCK
    ),
}


def apply_bijection(
    name: str, direction: str, path: Path, trace: Trace = None
) -> Path:
    try:
        spec = BIJECTIONS[name]
    except KeyError:
        raise ValueError(
            f"unknown bijection {name!r}; choose from " + ", ".join(BIJECTIONS)
        ) from None
    if direction == "fwd":
        return spec.forward(path, trace)
    if direction == "inv":
        return spec.inverse(path, trace)
    raise ValueError("direction must be 'fwd' or 'inv'")
