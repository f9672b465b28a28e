"""Lattice path families, parsing, and structural decompositions.

All paths run from the origin to a point on the x-axis and never dip below
it.  A path is stored as a string of step letters; the geometry of each
letter is global across families:

    u (1,1)   d (1,-1)   h (1,0)    v (0,-1)
    H (2,0)   D (1,-1)   a (1,0)    b (1,0)   A (1,0)

x_length counts horizontal displacement, so v steps are free.  The *level*
of a step is the ordinate of its endpoint; the matching step of a u at
level k is the first later down step (d, D or v) at level k-1.

Families restrict the alphabet and may add constraints: a tuple of
forbidden contiguous letter patterns, a no-horizontal-step-on-the-axis
rule, and a set of allowed prefixes.  `colored_dyck` uses D for a peak
down-step carrying the first color; D is only legal immediately after u.
`psi_image` refines bicolored Motzkin paths: a/A are the two flavors of
the marked horizontal step, d/D the two flavors of the down step, b the
plain horizontal step, and the path must open with a or A.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .errors import (
    ConstraintViolation,
    DomainViolation,
    EmptyPath,
    GeometryViolation,
    UnknownSymbol,
)

# (dx, dy) per letter; identical in every family that uses the letter.
STEP_GEOMETRY = {
    "u": (1, 1),
    "d": (1, -1),
    "h": (1, 0),
    "v": (0, -1),
    "H": (2, 0),
    "D": (1, -1),
    "a": (1, 0),
    "b": (1, 0),
    "A": (1, 0),
}

ALPHABETS = {
    "gmotzkin": "uhvd",
    "dyck": "ud",
    "motzkin": "uhd",
    "schroder": "uHd",
    "bicolored_motzkin": "uabd",
    "hstring": "ab",
    "colored_dyck": "udD",
    "psi_image": "uaAbdD",
}

DOWN_LETTERS = frozenset("dDv")


@dataclass(frozen=True)
class PathFamily:
    """A base alphabet plus optional constraints."""

    base: str
    avoid: tuple[str, ...] = ()
    no_h_on_axis: bool = False
    prefixes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.base not in ALPHABETS:
            raise ValueError(f"unknown family base {self.base!r}")

    @property
    def alphabet(self) -> str:
        return ALPHABETS[self.base]

    def avoiding(self, *patterns: str) -> "PathFamily":
        return replace(self, avoid=tuple(sorted(set(self.avoid) | set(patterns))))

    def restricted(self) -> "PathFamily":
        """The same family with horizontal steps banned on the x-axis."""
        return replace(self, no_h_on_axis=True)

    def describe(self) -> str:
        parts = [self.base]
        if self.avoid:
            parts.append("avoid=" + ",".join(self.avoid))
        if self.no_h_on_axis:
            parts.append("no-h-on-axis")
        if self.prefixes:
            parts.append("prefix in {" + ",".join(self.prefixes) + "}")
        return " ".join(parts)


GMOTZKIN = PathFamily("gmotzkin")
GMOTZKIN_UVU = GMOTZKIN.avoiding("uvu")
DYCK = PathFamily("dyck")
MOTZKIN = PathFamily("motzkin")
SCHRODER = PathFamily("schroder")
LITTLE_SCHRODER = SCHRODER.restricted()
BICOLORED_MOTZKIN = PathFamily("bicolored_motzkin")
HSTRING = PathFamily("hstring")
COLORED_DYCK = PathFamily("colored_dyck")
PSI_IMAGE = PathFamily("psi_image", prefixes=("a", "A"))

BASE_FAMILIES = {
    "gmotzkin": GMOTZKIN,
    "dyck": DYCK,
    "motzkin": MOTZKIN,
    "schroder": SCHRODER,
    "bicolored_motzkin": BICOLORED_MOTZKIN,
    "hstring": HSTRING,
    "colored_dyck": COLORED_DYCK,
    "psi_image": PSI_IMAGE,
}


@dataclass(frozen=True)
class Path:
    """A validated path.  Construct through `parse`."""

    family: PathFamily
    steps: str

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


def validate_steps(steps: str, family: PathFamily) -> None:
    alphabet = family.alphabet
    level = 0
    for pos, letter in enumerate(steps):
        if letter not in alphabet:
            raise UnknownSymbol(letter, pos)
        dx, dy = STEP_GEOMETRY[letter]
        if (
            letter == "D"
            and family.base == "colored_dyck"
            and (pos == 0 or steps[pos - 1] != "u")
        ):
            raise ConstraintViolation(
                f"colored peak step D at position {pos} does not follow u"
            )
        if family.no_h_on_axis and dy == 0 and level == 0:
            raise ConstraintViolation(
                f"horizontal step on the x-axis at position {pos}"
            )
        level += dy
        if level < 0:
            raise GeometryViolation("path dips below the x-axis", pos)
    if level != 0:
        raise GeometryViolation("path does not end on the x-axis", len(steps))
    for pattern in family.avoid:
        at = steps.find(pattern)
        if at >= 0:
            raise ConstraintViolation(
                f"forbidden pattern {pattern!r} at position {at}"
            )
    if family.prefixes and not any(steps.startswith(p) for p in family.prefixes):
        raise ConstraintViolation(
            "path must start with one of " + ", ".join(map(repr, family.prefixes))
        )


def parse(text: str, family: PathFamily) -> Path:
    validate_steps(text, family)
    return Path(family, text)


def render(path: Path) -> str:
    return path.steps


def x_length(path: Path) -> int:
    return sum(STEP_GEOMETRY[c][0] for c in path.steps)


def point_levels(path: Path) -> list[int]:
    """Ordinates of the len+1 lattice points the path visits."""
    levels = [0]
    for c in path.steps:
        levels.append(levels[-1] + STEP_GEOMETRY[c][1])
    return levels


def step_level(path: Path, index: int) -> int:
    """Ordinate of the endpoint of the step at `index`."""
    steps = path.steps
    if not -len(steps) <= index < len(steps):
        raise IndexError(f"step index {index} out of range")
    if index < 0:
        index += len(steps)
    level = 0
    for c in steps[: index + 1]:
        level += STEP_GEOMETRY[c][1]
    return level


def contains_pattern(path: Path, pattern: str) -> bool:
    return pattern in path.steps


# ---------------------------------------------------------------------------
# structural decompositions (string level, reused by the bijections)
# ---------------------------------------------------------------------------


def match_index_str(steps: str, u_index: int) -> int:
    """Index of the matching down step of the u at `u_index`."""
    if u_index >= len(steps) or steps[u_index] != "u":
        raise DomainViolation(f"step at index {u_index} is not u")
    level = 0
    for j in range(u_index + 1, len(steps)):
        dy = STEP_GEOMETRY[steps[j]][1]
        level += dy
        if level == -1:
            return j
    raise DomainViolation(f"u at index {u_index} has no matching step")


def is_primitive_str(steps: str) -> bool:
    """True for u P' d / u P' v / u P' D with P' never touching the axis."""
    if not steps:
        raise EmptyPath("the empty path is neither primitive nor decomposable")
    if steps[0] != "u" or steps[-1] not in DOWN_LETTERS:
        return False
    return match_index_str(steps, 0) == len(steps) - 1


def first_block_str(steps: str) -> int:
    """Length of the shortest nonempty prefix ending on the axis."""
    if not steps:
        raise EmptyPath("cannot decompose the empty path")
    if steps[0] != "u":
        # a horizontal step at level 0 is itself a block
        return 1
    return match_index_str(steps, 0) + 1


def _last_zero_before_end(steps: str) -> int:
    level = 0
    last = 0
    for p, c in enumerate(steps[:-1], start=1):
        level += STEP_GEOMETRY[c][1]
        if level == 0:
            last = p
    return last


class FirstReturn(NamedTuple):
    block: Path
    inner: Optional[Path]
    closer: Optional[str]
    tail: Path


def first_return_decompose(path: Path) -> FirstReturn:
    """Split off the shortest nonempty prefix that ends on the axis.

    When the block is an arch u...closer, `inner` is its interior (a path of
    the same family) and `closer` the final letter; for a horizontal block
    both are None.
    """
    steps = path.steps
    cut = first_block_str(steps)
    block = steps[:cut]
    tail = steps[cut:]
    family = path.family
    if block[0] == "u":
        return FirstReturn(
            Path(family, block),
            Path(family, block[1:-1]),
            block[-1],
            Path(family, tail),
        )
    return FirstReturn(Path(family, block), None, None, Path(family, tail))


def matching_index(path: Path, u_index: int) -> int:
    return match_index_str(path.steps, u_index)


def is_primitive(path: Path) -> bool:
    return is_primitive_str(path.steps)


class NestedUV(NamedTuple):
    i: int
    core: Path
    tail: Path


def nested_uv_decompose_str(steps: str) -> tuple[int, str, str]:
    """Maximal split u^i core v^i tail for a path opening with a v-matched u.

    The matching step of the k-th opening u is the v at index m1-(k-1),
    where m1 is the match of the first u; i is maximal, so the core is never
    of the form u P' v.
    """
    if not steps or steps[0] != "u":
        raise DomainViolation("nested uv decomposition needs a leading u")
    m1 = match_index_str(steps, 0)
    if steps[m1] != "v":
        raise DomainViolation("the leading u is matched by d, not v")
    i = 1
    while (
        steps[i] == "u"
        and steps[m1 - i] == "v"
        and match_index_str(steps, i) == m1 - i
    ):
        i += 1
    return i, steps[i : m1 - i + 1], steps[m1 + 1 :]


def nested_uv_decompose(path: Path) -> NestedUV:
    i, core, tail = nested_uv_decompose_str(path.steps)
    return NestedUV(i, Path(path.family, core), Path(path.family, tail))


def last_primitive_suffix_str(steps: str) -> tuple[str, str]:
    """Split path = prefix + arch at the last visit to the axis.

    The arch (everything after the final interior return to level 0) must be
    primitive, i.e. the path must not end with a horizontal step on the axis.
    """
    if not steps:
        raise EmptyPath("cannot take the primitive suffix of the empty path")
    p = _last_zero_before_end(steps)
    arch = steps[p:]
    if not is_primitive_str(arch):
        raise DomainViolation("path ends with a horizontal step on the axis")
    return steps[:p], arch


class PrimitiveSuffix(NamedTuple):
    prefix: Path
    arch: Path


def last_primitive_suffix(path: Path) -> PrimitiveSuffix:
    prefix, arch = last_primitive_suffix_str(path.steps)
    return PrimitiveSuffix(Path(path.family, prefix), Path(path.family, arch))
