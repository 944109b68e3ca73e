"""Line-oriented scene files.

A scene names points and lines and derives new ones through join, meet,
conjugate, and quadrangle directives.  The grammar has no expressions:

    point <name> = [a:b:c]
    line <name> = [a:b:c]
    line <name> = join <point> <point>
    point <name> = meet <line> <line>
    conjugate <name> = h(<A>,<B>;<C>) with <line> <point>
    conjugate <name> = h(<A>,<B>;<C>)
    quadrangle <A> <B> <C> <D> = <P> <Q> <R> <S>

Rationals are written "n/d" or "n"; "#" starts a comment.  Directives may
reference only previously defined names, names are unique across points
and lines, and every error carries its line number.  Printing a scene and
reparsing it yields an equal scene.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import (
    GeometryError,
    HomTriple,
    ProjLine,
    ProjPoint,
    format_triple,
    join,
    meet,
    parse_rational,
)
from .harmonic import auto_select_aux, AuxSelection, harmonic_conjugate, harmonic_from_quadrangle


class SceneError(Exception):
    """A scene file problem, located by line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class SceneParseError(SceneError):
    """Syntax, naming, or rational-format errors."""


class SceneGeometryError(SceneError):
    """A directive violated a geometric precondition."""


@dataclass(frozen=True)
class PointLiteral:
    name: str
    triple: HomTriple


@dataclass(frozen=True)
class LineLiteral:
    name: str
    triple: HomTriple


@dataclass(frozen=True)
class JoinDirective:
    name: str
    p: str
    q: str


@dataclass(frozen=True)
class MeetDirective:
    name: str
    l: str
    m: str


@dataclass(frozen=True)
class ConjugateDirective:
    name: str
    a: str
    b: str
    c: str
    aux_line: str | None
    aux_point: str | None


@dataclass(frozen=True)
class QuadrangleDirective:
    names: tuple[str, str, str, str]
    vertices: tuple[str, str, str, str]


Statement = Union[
    PointLiteral, LineLiteral, JoinDirective, MeetDirective, ConjugateDirective, QuadrangleDirective
]

_CONSTRUCTIONS = (JoinDirective, MeetDirective, ConjugateDirective, QuadrangleDirective)


@dataclass(frozen=True)
class Scene:
    """Named elements plus the ordered statements that produced them."""

    points: dict[str, ProjPoint]
    lines: dict[str, ProjLine]
    statements: tuple[Statement, ...]

    @property
    def constructions(self) -> tuple[Statement, ...]:
        return tuple(s for s in self.statements if isinstance(s, _CONSTRUCTIONS))


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_NAME_RE = re.compile(rf"^{_NAME}$")
_CONJUGATE_RE = re.compile(
    rf"^h\(\s*({_NAME})\s*,\s*({_NAME})\s*;\s*({_NAME})\s*\)"
    rf"(?:\s+with\s+({_NAME})\s+({_NAME}))?$"
)


def _parse_triple_tokens(line_no: int, text: str) -> HomTriple:
    token = text.strip()
    if not (token.startswith("[") and token.endswith("]")):
        raise SceneParseError(line_no, f"expected a homogeneous triple, got {token!r}")
    parts = token[1:-1].split(":")
    if len(parts) != 3:
        raise SceneParseError(line_no, f"expected three ':'-separated components in {token!r}")
    values = []
    for part in parts:
        try:
            values.append(parse_rational(part))
        except ValueError as exc:
            raise SceneParseError(line_no, str(exc)) from None
    try:
        return HomTriple(*values)
    except GeometryError as exc:
        raise SceneGeometryError(line_no, str(exc)) from None


class _Parser:
    def __init__(self, text: str) -> None:
        self.points: dict[str, ProjPoint] = {}
        self.lines: dict[str, ProjLine] = {}
        self.statements: list[Statement] = []
        self.defined_at: dict[str, int] = {}
        self.source = text

    def run(self) -> Scene:
        rows = []
        for line_no, raw in enumerate(self.source.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                rows.append((line_no, body))
        # First pass records where each name is defined so that a reference
        # to a later definition reads as a forward reference, not a typo.
        for line_no, body in rows:
            for name in self._defined_names(line_no, body):
                if name in self.defined_at:
                    raise SceneParseError(line_no, f"duplicate name {name!r}")
                self.defined_at[name] = line_no
        for line_no, body in rows:
            self._statement(line_no, body)
        return Scene(self.points, self.lines, tuple(self.statements))

    def _defined_names(self, line_no: int, body: str) -> list[str]:
        tokens = body.split()
        keyword = tokens[0]
        if keyword in ("point", "line", "conjugate"):
            if len(tokens) < 2:
                raise SceneParseError(line_no, f"missing name after {keyword!r}")
            return [self._name(line_no, tokens[1])]
        if keyword == "quadrangle":
            if "=" not in tokens:
                raise SceneParseError(line_no, "expected '=' in quadrangle directive")
            head = tokens[1 : tokens.index("=")]
            if len(head) != 4:
                raise SceneParseError(line_no, "quadrangle defines exactly four names")
            return [self._name(line_no, t) for t in head]
        raise SceneParseError(line_no, f"unknown directive {keyword!r}")

    def _name(self, line_no: int, token: str) -> str:
        if not _NAME_RE.match(token):
            raise SceneParseError(line_no, f"invalid name {token!r}")
        return token

    def _lookup_point(self, line_no: int, name: str) -> ProjPoint:
        if name in self.points:
            return self.points[name]
        self._missing(line_no, name, "point")
        raise AssertionError  # _missing always raises

    def _lookup_line(self, line_no: int, name: str) -> ProjLine:
        if name in self.lines:
            return self.lines[name]
        self._missing(line_no, name, "line")
        raise AssertionError

    def _missing(self, line_no: int, name: str, wanted: str) -> None:
        defined = self.defined_at.get(name)
        if defined is not None and defined > line_no:
            raise SceneParseError(
                line_no, f"forward reference to {name!r} (defined at line {defined})"
            )
        if name in self.points or name in self.lines:
            raise SceneParseError(line_no, f"{name!r} is not a {wanted}")
        raise SceneParseError(line_no, f"unknown name {name!r}")

    def _bind_point(self, line_no: int, name: str, value: ProjPoint) -> None:
        del line_no  # uniqueness was enforced during the first pass
        self.points[name] = value

    def _bind_line(self, line_no: int, name: str, value: ProjLine) -> None:
        del line_no
        self.lines[name] = value

    def _statement(self, line_no: int, body: str) -> None:
        tokens = body.split()
        keyword = tokens[0]
        if keyword == "quadrangle":
            self._quadrangle(line_no, tokens)
            return
        if len(tokens) < 3 or tokens[2] != "=":
            raise SceneParseError(line_no, f"expected '{keyword} <name> = ...'")
        name = self._name(line_no, tokens[1])
        rhs_tokens = tokens[3:]
        rhs = " ".join(rhs_tokens)
        if keyword == "point":
            self._point(line_no, name, rhs_tokens, rhs)
        elif keyword == "line":
            self._line(line_no, name, rhs_tokens, rhs)
        elif keyword == "conjugate":
            self._conjugate(line_no, name, rhs)
        else:
            raise SceneParseError(line_no, f"unknown directive {keyword!r}")

    def _point(self, line_no: int, name: str, rhs_tokens: list[str], rhs: str) -> None:
        if rhs_tokens and rhs_tokens[0] == "meet":
            if len(rhs_tokens) != 3:
                raise SceneParseError(line_no, "expected 'meet <line> <line>'")
            l = self._lookup_line(line_no, rhs_tokens[1])
            m = self._lookup_line(line_no, rhs_tokens[2])
            value = self._geometry(line_no, lambda: meet(l, m))
            self.statements.append(MeetDirective(name, rhs_tokens[1], rhs_tokens[2]))
        else:
            value = ProjPoint(_parse_triple_tokens(line_no, rhs))
            self.statements.append(PointLiteral(name, value.coords))
        self._bind_point(line_no, name, value)

    def _line(self, line_no: int, name: str, rhs_tokens: list[str], rhs: str) -> None:
        if rhs_tokens and rhs_tokens[0] == "join":
            if len(rhs_tokens) != 3:
                raise SceneParseError(line_no, "expected 'join <point> <point>'")
            p = self._lookup_point(line_no, rhs_tokens[1])
            q = self._lookup_point(line_no, rhs_tokens[2])
            value = self._geometry(line_no, lambda: join(p, q))
            self.statements.append(JoinDirective(name, rhs_tokens[1], rhs_tokens[2]))
        else:
            value = ProjLine(_parse_triple_tokens(line_no, rhs))
            self.statements.append(LineLiteral(name, value.coeffs))
        self._bind_line(line_no, name, value)

    def _conjugate(self, line_no: int, name: str, rhs: str) -> None:
        match = _CONJUGATE_RE.match(rhs)
        if not match:
            raise SceneParseError(
                line_no, "expected 'h(<A>,<B>;<C>)' optionally followed by 'with <line> <point>'"
            )
        a_name, b_name, c_name, l_name, r_name = match.groups()
        a = self._lookup_point(line_no, a_name)
        b = self._lookup_point(line_no, b_name)
        c = self._lookup_point(line_no, c_name)
        if l_name is not None:
            aux = AuxSelection(
                self._lookup_line(line_no, l_name), self._lookup_point(line_no, r_name)
            )
        else:
            aux = self._geometry(line_no, lambda: auto_select_aux(a, b, c))
        witness = self._geometry(line_no, lambda: harmonic_conjugate(a, b, c, aux))
        self.statements.append(ConjugateDirective(name, a_name, b_name, c_name, l_name, r_name))
        self._bind_point(line_no, name, witness.d)

    def _quadrangle(self, line_no: int, tokens: list[str]) -> None:
        if len(tokens) != 10 or tokens[5] != "=":
            raise SceneParseError(
                line_no, "expected 'quadrangle <A> <B> <C> <D> = <P> <Q> <R> <S>'"
            )
        names = tuple(self._name(line_no, t) for t in tokens[1:5])
        vertex_names = tuple(self._name(line_no, t) for t in tokens[6:10])
        vertices = tuple(self._lookup_point(line_no, t) for t in vertex_names)
        a, b, c, d = self._geometry(line_no, lambda: harmonic_from_quadrangle(*vertices))
        for bound_name, value in zip(names, (a, b, c, d)):
            self._bind_point(line_no, bound_name, value)
        self.statements.append(QuadrangleDirective(names, vertex_names))

    def _geometry(self, line_no: int, thunk):
        try:
            return thunk()
        except GeometryError as exc:
            raise SceneGeometryError(line_no, str(exc)) from None


def parse_scene(text: str) -> Scene:
    """Parse and evaluate a scene file."""
    return _Parser(text).run()


def format_scene(scene: Scene) -> str:
    """Print a scene so that reparsing yields an equal scene."""
    out = []
    for stmt in scene.statements:
        if isinstance(stmt, PointLiteral):
            out.append(f"point {stmt.name} = {format_triple(stmt.triple)}")
        elif isinstance(stmt, LineLiteral):
            out.append(f"line {stmt.name} = {format_triple(stmt.triple)}")
        elif isinstance(stmt, JoinDirective):
            out.append(f"line {stmt.name} = join {stmt.p} {stmt.q}")
        elif isinstance(stmt, MeetDirective):
            out.append(f"point {stmt.name} = meet {stmt.l} {stmt.m}")
        elif isinstance(stmt, ConjugateDirective):
            text = f"conjugate {stmt.name} = h({stmt.a},{stmt.b};{stmt.c})"
            if stmt.aux_line is not None:
                text += f" with {stmt.aux_line} {stmt.aux_point}"
            out.append(text)
        else:
            names = " ".join(stmt.names)
            vertices = " ".join(stmt.vertices)
            out.append(f"quadrangle {names} = {vertices}")
    return "\n".join(out) + ("\n" if out else "")
