"""Exact rational projective plane with harmonic conjugates.

Homogeneous coordinates over unbounded rationals make every incidence and
apartness question decidable, so the harmonic conjugate construction, its
invariance under the choice of auxiliary elements, and the triangle
perspectivity implications can all be checked mechanically.  Everything is
an immutable value operated on by pure functions.
"""

from .core import (
    DegenerateError,
    GeometryError,
    HomTriple,
    PreconditionError,
    ProjLine,
    ProjPoint,
    Rational,
    affine_point,
    canonicalize,
    collinear,
    concurrent,
    format_rational,
    format_triple,
    incident,
    join,
    line,
    meet,
    parse_rational,
    parse_triple,
    point,
)
from .desargues import (
    PerspectivityReport,
    Triangle,
    TrianglePair,
    check_converse,
    check_desargues,
    perspective_from_axis,
    perspective_from_center,
    triangles_distinct,
)
from .harmonic import (
    INFINITY,
    AuxSelection,
    HarmonicWitness,
    Infinity,
    LemmaId,
    LemmaReport,
    auto_select_aux,
    cross_ratio,
    harmonic_conjugate,
    harmonic_from_quadrangle,
    lemma_checks,
    special_case_conditions,
    third_selection,
    validate_aux,
)
from .harness import (
    TrialConfig,
    TrialReport,
    gen_base,
    gen_valid_aux,
    run_axiom_suite,
    run_desargues_trials,
    run_invariance_trials,
    run_special_case_trials,
)
from .predicates import (
    ApartnessWitness,
    Branch,
    CotransChoice,
    WitnessKind,
    c7_pick,
    cotransitive_pick,
    line_apart,
    outside,
    point_apart,
)
from .scene import Scene, SceneError, SceneGeometryError, SceneParseError, format_scene, parse_scene
from .svgfig import RenderOptions, render_scene

__version__ = "0.1.0"
