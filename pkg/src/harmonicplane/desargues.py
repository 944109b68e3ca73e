"""Triangle perspectivity checkers.

Two triangles are distinct when corresponding vertices and corresponding
sides are pairwise apart.  A distinct pair is perspective from a center O
when the joins of corresponding vertices concur at O and O is outside all
six sides, and perspective from an axis when the meets of corresponding
sides are collinear on a line avoiding all six vertices.  The rational
plane satisfies both implications between the two notions; the checkers
here verify them configuration by configuration, reporting every side
condition individually so a failure localizes to a single clause.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    PreconditionError,
    ProjLine,
    ProjPoint,
    concurrent,
    collinear,
    join,
    meet,
)
from .predicates import line_apart, outside, point_apart


@dataclass(frozen=True)
class Triangle:
    """Three pairwise-apart vertices, each outside its opposite side."""

    v1: ProjPoint
    v2: ProjPoint
    v3: ProjPoint
    s23: ProjLine
    s13: ProjLine
    s12: ProjLine

    def __post_init__(self) -> None:
        if not (
            point_apart(self.v1, self.v2)
            and point_apart(self.v1, self.v3)
            and point_apart(self.v2, self.v3)
        ):
            raise PreconditionError("triangle vertices must be pairwise apart")
        if self.s23 != join(self.v2, self.v3) or self.s13 != join(self.v1, self.v3) or self.s12 != join(
            self.v1, self.v2
        ):
            raise PreconditionError("triangle sides must be the joins of the vertices")
        if not (outside(self.v1, self.s23) and outside(self.v2, self.s13) and outside(self.v3, self.s12)):
            raise PreconditionError("triangle vertices must not be collinear")

    @classmethod
    def from_vertices(cls, v1: ProjPoint, v2: ProjPoint, v3: ProjPoint) -> "Triangle":
        if not (point_apart(v1, v2) and point_apart(v1, v3) and point_apart(v2, v3)):
            raise PreconditionError("triangle vertices must be pairwise apart")
        return cls(v1, v2, v3, join(v2, v3), join(v1, v3), join(v1, v2))

    @property
    def vertices(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return (self.v1, self.v2, self.v3)

    @property
    def sides(self) -> tuple[ProjLine, ProjLine, ProjLine]:
        return (self.s23, self.s13, self.s12)


@dataclass(frozen=True)
class TrianglePair:
    """Two triangles in corresponding labelling.

    The perspectivity operations require the pair to be distinct
    (corresponding vertices apart and corresponding sides apart) and raise
    otherwise; the container itself does not enforce it so that failing
    pairs can be fed to ``triangles_distinct``.
    """

    t1: Triangle
    t2: Triangle


@dataclass(frozen=True)
class PerspectivityReport:
    """Outcome of a perspectivity check with each condition itemized."""

    from_center: ProjPoint | None
    from_axis: ProjLine | None
    side_conditions: tuple[tuple[str, bool], ...]


def triangles_distinct(t1: Triangle, t2: Triangle) -> bool:
    """Corresponding vertices pairwise apart and corresponding sides too."""
    return (
        point_apart(t1.v1, t2.v1)
        and point_apart(t1.v2, t2.v2)
        and point_apart(t1.v3, t2.v3)
        and line_apart(t1.s23, t2.s23)
        and line_apart(t1.s13, t2.s13)
        and line_apart(t1.s12, t2.s12)
    )


def _require_distinct(pair: TrianglePair) -> None:
    if not triangles_distinct(pair.t1, pair.t2):
        raise PreconditionError("triangles are not distinct")


_SIDE_LABELS = ("s23", "s13", "s12")
_VERTEX_LABELS = ("v1", "v2", "v3")


def perspective_from_center(pair: TrianglePair) -> PerspectivityReport:
    """Find the center of perspectivity if the pair has one.

    The center is reported only when the three vertex joins concur and the
    candidate center is outside all six sides.
    """
    _require_distinct(pair)
    t1, t2 = pair.t1, pair.t2
    joins = tuple(join(u, v) for u, v in zip(t1.vertices, t2.vertices))
    conditions = [
        ("vertex joins v1,v2 apart", line_apart(joins[0], joins[1])),
        ("vertex joins v1,v3 apart", line_apart(joins[0], joins[2])),
        ("vertex joins v2,v3 apart", line_apart(joins[1], joins[2])),
        ("vertex joins concurrent", concurrent(*joins)),
    ]
    if not all(ok for _, ok in conditions):
        return PerspectivityReport(None, None, tuple(conditions))
    o = meet(joins[0], joins[1])
    for tri_label, tri in (("t1", t1), ("t2", t2)):
        for side_label, side in zip(_SIDE_LABELS, tri.sides):
            conditions.append((f"O outside {tri_label}.{side_label}", outside(o, side)))
    ok = all(passed for _, passed in conditions)
    return PerspectivityReport(o if ok else None, None, tuple(conditions))


def perspective_from_axis(pair: TrianglePair) -> PerspectivityReport:
    """Find the axis of perspectivity if the pair has one.

    The axis is reported only when the three side meets are collinear and
    the candidate axis avoids all six vertices.
    """
    _require_distinct(pair)
    t1, t2 = pair.t1, pair.t2
    meets = tuple(meet(u, v) for u, v in zip(t1.sides, t2.sides))
    conditions = [
        ("side meets s23,s13 apart", point_apart(meets[0], meets[1])),
        ("side meets s23,s12 apart", point_apart(meets[0], meets[2])),
        ("side meets s13,s12 apart", point_apart(meets[1], meets[2])),
        ("side meets collinear", collinear(*meets)),
    ]
    if not all(ok for _, ok in conditions):
        return PerspectivityReport(None, None, tuple(conditions))
    axis = join(meets[0], meets[1])
    for tri_label, tri in (("t1", t1), ("t2", t2)):
        for vertex_label, vertex in zip(_VERTEX_LABELS, tri.vertices):
            conditions.append((f"axis avoids {tri_label}.{vertex_label}", outside(vertex, axis)))
    ok = all(passed for _, passed in conditions)
    return PerspectivityReport(None, axis if ok else None, tuple(conditions))


def check_desargues(pair: TrianglePair) -> bool:
    """Center perspectivity must force axis perspectivity.

    Requires the pair to be perspective from a center; a False return
    would mean the coordinate model violates the implication, which is a
    build-breaking event rather than an expected outcome.
    """
    center_report = perspective_from_center(pair)
    if center_report.from_center is None:
        raise PreconditionError("pair is not perspective from a center")
    return perspective_from_axis(pair).from_axis is not None


def check_converse(pair: TrianglePair) -> bool:
    """Axis perspectivity must force center perspectivity."""
    axis_report = perspective_from_axis(pair)
    if axis_report.from_axis is None:
        raise PreconditionError("pair is not perspective from an axis")
    return perspective_from_center(pair).from_center is not None
