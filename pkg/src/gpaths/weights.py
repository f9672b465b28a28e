"""Sparse integer polynomials in a, b, c and the step weightings.

A Polynomial maps exponent triples (ea, eb, ec) to nonzero integer
coefficients.  This is the value ring for all weighted counts: exact, no
floats anywhere.  Evaluation substitutes Fractions and returns a Fraction.

A weighting assigns each step a monomial weight; the weight of a path is
the product over its steps, so it is always a single monomial, and a
weighted count is a plain sum of monomials.  Peak rules (a down step
immediately after an up step) are the only position-dependent case.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import FamilyMismatch
from .paths import Path

_ZERO = (0, 0, 0)


class Polynomial:
    """Integer polynomial in a, b, c with sparse exponent-dict storage."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int, int], int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, n: int) -> "Polynomial":
        return cls({_ZERO: n})

    @classmethod
    def monomial(cls, coeff: int, ea: int, eb: int, ec: int) -> "Polynomial":
        return cls({(ea, eb, ec): coeff})

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        i = "abc".index(name)
        e = [0, 0, 0]
        e[i] = 1
        return cls({tuple(e): 1})

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int, int], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, ea: int, eb: int, ec: int) -> int:
        return self.terms.get((ea, eb, ec), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def eval_at(self, a, b, c=0) -> Fraction:
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        total = Fraction(0)
        for (ea, eb, ec), coeff in self.terms.items():
            total += coeff * a**ea * b**eb * c**ec
        return total

    def subs(self, a: "Polynomial", b: "Polynomial", c: "Polynomial") -> "Polynomial":
        """Substitute polynomials for the three variables."""
        total = Polynomial()
        for (ea, eb, ec), coeff in self.terms.items():
            total = total + coeff * a**ea * b**eb * c**ec
        return total

    # -- text form ----------------------------------------------------------

    def _sorted_terms(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        # degree-lexicographic, highest first
        return iter(
            sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self._sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip("abc", exps)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


A = Polynomial.var("a")
B = Polynomial.var("b")
C = Polynomial.var("c")
ONE = Polynomial.const(1)
ZERO = Polynomial()


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, a, b, c=0) -> Fraction:
    return p.eval_at(a, b, c)


# ---------------------------------------------------------------------------
# weightings
# ---------------------------------------------------------------------------

# exponent triple contributed by a step; peak-sensitive entries are pairs
# (at_peak, otherwise) keyed on the preceding letter being u
_U = (0, 0, 0)
_A1 = (1, 0, 0)
_B1 = (0, 1, 0)
_C1 = (0, 0, 1)
_B2 = (0, 2, 0)
_AB = (1, 1, 0)

WEIGHTINGS: dict[str, tuple[frozenset[str], dict[str, tuple[int, int, int]]]] = {
    # u -> 1, h -> a, v -> b, d -> c
    "gmotzkin_abc": (
        frozenset({"gmotzkin"}),
        {"u": _U, "h": _A1, "v": _B1, "d": _C1},
    ),
    # the c = b^2 specialization used by the bijections
    "gmotzkin_ab_bsq": (
        frozenset({"gmotzkin"}),
        {"u": _U, "h": _A1, "v": _B1, "d": _B2},
    ),
    # h -> a, d -> b on plain Motzkin paths
    "motzkin_ab": (
        frozenset({"motzkin"}),
        {"u": _U, "h": _A1, "d": _B1},
    ),
    # H -> a, d -> b on (little) Schroder paths
    "schroder_ab": (
        frozenset({"schroder"}),
        {"u": _U, "H": _A1, "d": _B1},
    ),
    # peak down steps weigh a, the rest b; on colored paths D marks the
    # a-weighted peaks and d is always b
    "dyck_peak_ab": (
        frozenset({"dyck", "colored_dyck"}),
        {"u": _U, "d": _B1, "D": _A1},
    ),
    # the two horizontal colors weigh a and b, down steps ab
    "bicolored_motzkin_ab": (
        frozenset({"bicolored_motzkin"}),
        {"u": _U, "a": _A1, "b": _B1, "d": _AB},
    ),
    "hstring_ab": (
        frozenset({"hstring"}),
        {"a": _A1, "b": _B1},
    ),
    # flavored image alphabet: a/A are the two flavors of the marked
    # horizontal step (weights a and b), d/D the two down flavors (ab, b^2)
    "psi_image_ab": (
        frozenset({"psi_image"}),
        {"u": _U, "a": _A1, "A": _B1, "b": _B1, "d": _AB, "D": _B2},
    ),
}


def weight(path: Path, weighting: str) -> Polynomial:
    """Product of the step weights: always a single monomial."""
    try:
        bases, table = WEIGHTINGS[weighting]
    except KeyError:
        raise FamilyMismatch(f"unknown weighting {weighting!r}") from None
    if path.family.base not in bases:
        raise FamilyMismatch(
            f"weighting {weighting!r} does not apply to family "
            f"{path.family.base!r}"
        )
    return Polynomial({weight_exponents(path.steps, weighting, path.family.base): 1})


def weight_exponents(
    steps: str, weighting: str, base: str
) -> tuple[int, int, int]:
    """Exponent triple of the monomial weight of a step string.

    On plain dyck paths the peak rule is structural (a d right after a u
    weighs a); on colored paths the color letter alone decides.
    """
    table = WEIGHTINGS[weighting][1]
    ea = eb = ec = 0
    peaks = weighting == "dyck_peak_ab" and base == "dyck"
    prev = ""
    for letter in steps:
        if peaks and letter == "d" and prev == "u":
            e = _A1
        else:
            e = table[letter]
        ea += e[0]
        eb += e[1]
        ec += e[2]
        prev = letter
    return (ea, eb, ec)
