"""Command-line front end.

Three commands: ``conjugate`` builds one harmonic conjugate and prints the
witness, ``verify`` runs the randomized campaigns, ``render`` turns a
scene file into an SVG figure.  Exit codes: 0 success, 1 usage or I/O
error, 2 geometric precondition violation.  ``HARMONIC_SEED`` supplies the
default seed for ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .core import GeometryError, ProjLine, ProjPoint, parse_rational, parse_triple
from .harmonic import AuxSelection, auto_select_aux, harmonic_conjugate
from .harness import (
    TrialConfig,
    run_axiom_suite,
    run_desargues_trials,
    run_invariance_trials,
    run_special_case_trials,
)
from .scene import SceneGeometryError, SceneError, parse_scene
from .svgfig import RenderOptions, render_scene

_SUITES = (
    ("invariance", run_invariance_trials),
    ("special-case", run_special_case_trials),
    ("desargues", run_desargues_trials),
    ("axioms", run_axiom_suite),
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # geometric precondition violations here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="harmonic-plane", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    conj = sub.add_parser("conjugate", help="construct a harmonic conjugate")
    conj.add_argument("--a", required=True, metavar="[x:y:z]", help="first base point")
    conj.add_argument("--b", required=True, metavar="[x:y:z]", help="second base point")
    conj.add_argument("--c", required=True, metavar="[x:y:z]", help="point on AB to conjugate")
    conj.add_argument("--l", metavar="[a:b:c]", help="auxiliary line through C")
    conj.add_argument("--r", metavar="[x:y:z]", help="auxiliary point")
    conj.add_argument("--json", action="store_true", help="emit the witness as JSON")

    verify = sub.add_parser("verify", help="run randomized verification campaigns")
    verify.add_argument(
        "--suite",
        default="all",
        help="invariance | special-case | desargues | axioms | all",
    )
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=None, help="defaults to $HARMONIC_SEED or 0")
    verify.add_argument("--bound", type=int, default=10, help="coordinate bound for generators")

    render = sub.add_parser("render", help="render a scene file to SVG")
    render.add_argument("--scene", required=True, help="scene file path")
    render.add_argument("--out", required=True, help="output SVG path")
    render.add_argument(
        "--viewport",
        default="-5,-5,5,5",
        metavar="xmin,ymin,xmax,ymax",
        help="affine viewport, rational components",
    )
    render.add_argument("--width", type=int, default=800)
    render.add_argument("--height", type=int, default=600)
    render.add_argument("--no-point-labels", action="store_true")
    render.add_argument("--no-line-labels", action="store_true")
    return parser


def _triple_arg(text: str, flag: str):
    try:
        return parse_triple(text)
    except (ValueError, GeometryError) as exc:
        raise ValueError(f"{flag}: {exc}") from None


def _cmd_conjugate(args: argparse.Namespace) -> int:
    try:
        a = ProjPoint(_triple_arg(args.a, "--a"))
        b = ProjPoint(_triple_arg(args.b, "--b"))
        c = ProjPoint(_triple_arg(args.c, "--c"))
        if (args.l is None) != (args.r is None):
            raise ValueError("provide both --l and --r, or neither")
        aux = None
        if args.l is not None:
            aux = AuxSelection(ProjLine(_triple_arg(args.l, "--l")), ProjPoint(_triple_arg(args.r, "--r")))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if aux is None:
            aux = auto_select_aux(a, b, c)
        witness = harmonic_conjugate(a, b, c, aux)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = {
            "A": str(witness.a),
            "B": str(witness.b),
            "C": str(witness.c),
            "D": str(witness.d),
            "P": str(witness.p),
            "Q": str(witness.q),
            "S": str(witness.s),
            "l": str(witness.aux.line),
            "R": str(witness.aux.point),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"D = {witness.d}")
        print(f"P = {witness.p}")
        print(f"Q = {witness.q}")
        print(f"S = {witness.s}")
        print(f"l = {witness.aux.line}")
        print(f"R = {witness.aux.point}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = [name for name, _ in _SUITES]
    if args.suite == "all":
        selected = list(_SUITES)
    else:
        table = dict(_SUITES)
        if args.suite not in table:
            print(
                f"error: unknown suite {args.suite!r} (choose from {', '.join(names)}, all)",
                file=sys.stderr,
            )
            return 1
        selected = [(args.suite, table[args.suite])]
    seed = args.seed
    if seed is None:
        raw = os.environ.get("HARMONIC_SEED", "0")
        try:
            seed = int(raw)
        except ValueError:
            print(f"error: HARMONIC_SEED is not an integer: {raw!r}", file=sys.stderr)
            return 1
    try:
        config = TrialConfig(seed=seed, trials=args.trials, coord_bound=args.bound)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    total_failures = 0
    for _, runner in selected:
        report = runner(config)
        print(report.to_line())
        total_failures += report.failures
    return 0 if total_failures == 0 else 1


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        text = open(args.scene, "r", encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        scene = parse_scene(text)
    except SceneGeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SceneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        components = [parse_rational(part) for part in args.viewport.split(",")]
        if len(components) != 4:
            raise ValueError("viewport needs four comma-separated rationals")
        options = RenderOptions(
            viewport=(components[0], components[1], components[2], components[3]),
            width_px=args.width,
            height_px=args.height,
            point_labels=not args.no_point_labels,
            line_labels=not args.no_line_labels,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    svg, warnings = render_scene(scene, options)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "conjugate":
        return _cmd_conjugate(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_render(args)


if __name__ == "__main__":
    sys.exit(main())
