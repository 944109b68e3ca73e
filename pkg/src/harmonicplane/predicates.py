"""Apartness-style relations as exact decision procedures.

Each positive relation (two points apart, a point off a line) is decided by
an integer certificate that is nonzero exactly when the relation holds:
a cross-product component for apartness, a dot product for "outside".
Choice procedures return the certificate alongside the branch taken, so
every decision can be audited and recomputed after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    HomTriple,
    PreconditionError,
    ProjLine,
    ProjPoint,
    cross,
    dot,
    meet,
)


class WitnessKind(Enum):
    POINT_APART = "PointApart"
    LINE_APART = "LineApart"
    POINT_OUTSIDE_LINE = "PointOutsideLine"


class Branch(Enum):
    LEFT = "Left"
    RIGHT = "Right"


def _first_nonzero(t: HomTriple) -> int:
    for v in t.as_tuple():
        if v != 0:
            return v
    return 0


def _apartness_certificate(kind: WitnessKind, left: HomTriple, right: HomTriple) -> int:
    if kind is WitnessKind.POINT_OUTSIDE_LINE:
        return dot(left, right)
    c = cross(left, right)
    return 0 if c is None else _first_nonzero(c)


@dataclass(frozen=True)
class ApartnessWitness:
    """A certified positive inequality between two coordinate triples."""

    kind: WitnessKind
    left: HomTriple
    right: HomTriple
    certificate: int

    def recompute(self) -> int:
        """Re-derive the certificate from the stored triples."""
        return _apartness_certificate(self.kind, self.left, self.right)


@dataclass(frozen=True)
class CotransChoice:
    """The branch taken by a choice procedure, with its witness."""

    branch: Branch
    witness: ApartnessWitness


def point_apart(p: ProjPoint, q: ProjPoint) -> bool:
    """True iff the coordinate cross product is nonzero.

    Because triples are canonical this is exactly ``p != q`` (tightness);
    the cross product is still evaluated so the positive content of the
    relation is what gets computed.
    """
    return cross(p.coords, q.coords) is not None


def line_apart(l: ProjLine, m: ProjLine) -> bool:
    return cross(l.coeffs, m.coeffs) is not None


def outside(p: ProjPoint, l: ProjLine) -> bool:
    """True iff the dot product is nonzero; the negation of incidence."""
    return dot(p.coords, l.coeffs) != 0


def point_witness(p: ProjPoint, q: ProjPoint) -> ApartnessWitness | None:
    cert = _apartness_certificate(WitnessKind.POINT_APART, p.coords, q.coords)
    if cert == 0:
        return None
    return ApartnessWitness(WitnessKind.POINT_APART, p.coords, q.coords, cert)


def line_witness(l: ProjLine, m: ProjLine) -> ApartnessWitness | None:
    cert = _apartness_certificate(WitnessKind.LINE_APART, l.coeffs, m.coeffs)
    if cert == 0:
        return None
    return ApartnessWitness(WitnessKind.LINE_APART, l.coeffs, m.coeffs, cert)


def outside_witness(p: ProjPoint, l: ProjLine) -> ApartnessWitness | None:
    cert = _apartness_certificate(WitnessKind.POINT_OUTSIDE_LINE, p.coords, l.coeffs)
    if cert == 0:
        return None
    return ApartnessWitness(WitnessKind.POINT_OUTSIDE_LINE, p.coords, l.coeffs, cert)


def cotransitive_pick(x: ProjPoint, p: ProjPoint, q: ProjPoint) -> CotransChoice:
    """Decide ``x != p`` (Left) or ``x != q`` (Right), given ``p != q``.

    When both hold the Left branch is returned, so trials are reproducible.
    """
    if not point_apart(p, q):
        raise PreconditionError("cotransitivity requires apart alternatives")
    w = point_witness(x, p)
    if w is not None:
        return CotransChoice(Branch.LEFT, w)
    w = point_witness(x, q)
    assert w is not None  # x = p and p apart from q force x apart from q
    return CotransChoice(Branch.RIGHT, w)


def c7_pick(l: ProjLine, m: ProjLine, p: ProjPoint) -> CotransChoice:
    """Decide which of two apart lines avoids a point apart from their meet.

    Left certifies ``p`` outside ``l``, Right certifies ``p`` outside ``m``;
    ties break Left.
    """
    if not line_apart(l, m):
        raise PreconditionError("lines must be apart")
    if not point_apart(p, meet(l, m)):
        raise PreconditionError("point must be apart from the meet of the lines")
    w = outside_witness(p, l)
    if w is not None:
        return CotransChoice(Branch.LEFT, w)
    w = outside_witness(p, m)
    assert w is not None  # p on both lines would place it at the meet
    return CotransChoice(Branch.RIGHT, w)
