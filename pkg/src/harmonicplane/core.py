"""Exact homogeneous coordinates over the rationals.

Points and lines are stored as canonical integer triples: coprime entries,
first nonzero entry positive.  Two triples describe the same projective
element exactly when their canonical forms are identical, so equality (and
therefore apartness) is a plain representation check.  All arithmetic is
exact; nothing in this package ever rounds.

Every type here is an immutable value and every operation is a pure
function, so the whole module is safe to use from concurrent workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# The scalar field of the model: exact unbounded fractions.
Rational = Fraction

RationalLike = Fraction | int


class GeometryError(Exception):
    """Base class for geometric failures raised by this package."""


class DegenerateError(GeometryError):
    """A coordinate triple or figure collapsed to something meaningless."""


class PreconditionError(GeometryError):
    """An operation was invoked outside its stated preconditions."""


def _canonical_ints(x0: RationalLike, x1: RationalLike, x2: RationalLike) -> tuple[int, int, int]:
    fr = (Fraction(x0), Fraction(x1), Fraction(x2))
    if not any(fr):
        raise DegenerateError("degenerate homogeneous coordinates (zero triple)")
    scale = 1
    for f in fr:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fr]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints[0], ints[1], ints[2]


@dataclass(frozen=True)
class HomTriple:
    """A canonical homogeneous coordinate triple.

    Construction accepts any exact rationals (not all zero) and normalizes
    them, so equality of ``HomTriple`` values is projective equality.
    """

    x0: int
    x1: int
    x2: int

    def __post_init__(self) -> None:
        a, b, c = _canonical_ints(self.x0, self.x1, self.x2)
        object.__setattr__(self, "x0", a)
        object.__setattr__(self, "x1", b)
        object.__setattr__(self, "x2", c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)

    def __str__(self) -> str:
        return format_triple(self)


def canonicalize(x0: RationalLike, x1: RationalLike, x2: RationalLike) -> HomTriple:
    """Build the canonical triple for arbitrary (not all zero) rationals.

    Idempotent, and scalar multiples of the input map to the same output.
    """
    return HomTriple(x0, x1, x2)


@dataclass(frozen=True)
class ProjPoint:
    """A point of the projective plane, held as a canonical triple."""

    coords: HomTriple

    def __str__(self) -> str:
        return format_triple(self.coords)


@dataclass(frozen=True)
class ProjLine:
    """A line of the projective plane, held as a canonical coefficient triple."""

    coeffs: HomTriple

    def __str__(self) -> str:
        return format_triple(self.coeffs)


def point(x0: RationalLike, x1: RationalLike, x2: RationalLike) -> ProjPoint:
    return ProjPoint(HomTriple(x0, x1, x2))


def line(x0: RationalLike, x1: RationalLike, x2: RationalLike) -> ProjLine:
    return ProjLine(HomTriple(x0, x1, x2))


def affine_point(x: RationalLike, y: RationalLike) -> ProjPoint:
    return point(x, y, 1)


def dot(a: HomTriple, b: HomTriple) -> int:
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2


def cross(a: HomTriple, b: HomTriple) -> HomTriple | None:
    """Cross product of two triples; None when they are proportional."""
    c0 = a.x1 * b.x2 - a.x2 * b.x1
    c1 = a.x2 * b.x0 - a.x0 * b.x2
    c2 = a.x0 * b.x1 - a.x1 * b.x0
    if c0 == 0 and c1 == 0 and c2 == 0:
        return None
    return HomTriple(c0, c1, c2)


def det3(a: HomTriple, b: HomTriple, c: HomTriple) -> int:
    return (
        a.x0 * (b.x1 * c.x2 - b.x2 * c.x1)
        - a.x1 * (b.x0 * c.x2 - b.x2 * c.x0)
        + a.x2 * (b.x0 * c.x1 - b.x1 * c.x0)
    )


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two apart points."""
    c = cross(p.coords, q.coords)
    if c is None:
        raise PreconditionError("join of equal points")
    return ProjLine(c)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The unique point on two apart lines."""
    c = cross(l.coeffs, m.coeffs)
    if c is None:
        raise PreconditionError("meet of equal lines")
    return ProjPoint(c)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    """Exact incidence: the coordinate dot product vanishes."""
    return dot(p.coords, l.coeffs) == 0


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return det3(l.coeffs, m.coeffs, n.coeffs) == 0


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the text form "n/d" or "n" (ValueError on anything else)."""
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"invalid rational {token!r}")
    return Fraction(token)


def format_rational(value: RationalLike) -> str:
    return str(Fraction(value))


def parse_triple(text: str) -> HomTriple:
    """Parse the text form "[a:b:c]" with rational components."""
    token = text.strip()
    if not (token.startswith("[") and token.endswith("]")):
        raise ValueError(f"invalid homogeneous triple {token!r}")
    parts = token[1:-1].split(":")
    if len(parts) != 3:
        raise ValueError(f"invalid homogeneous triple {token!r}")
    return HomTriple(*(parse_rational(part) for part in parts))


def format_triple(t: HomTriple) -> str:
    return f"[{t.x0}:{t.x1}:{t.x2}]"
