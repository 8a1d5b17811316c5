"""Canonical shadows of twist loops, foils, twist knots and the figure-eight.

Twist crossings are drawn left to right along a horizontal band. Every twist
crossing is joined to its right neighbour by two arcs, NE to NW on top and
SE to SW at the bottom.
"""
from dataclasses import dataclass
from enum import Enum

from shadow_states.common import validate
from shadow_states.shadow_core import Dart, ShadowDiagram, dart_at, make_diagram

Arc = tuple[tuple[int, int], tuple[int, int]]

NE, NW, SW, SE = 0, 1, 2, 3


class Family(str, Enum):
    TWIST_LOOP = "twist-loop"
    FOIL = "foil"
    TWIST_KNOT = "twist-knot"
    FIGURE_EIGHT = "figure-eight"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    half_twists: int = 0

    def __post_init__(self):
        validate(self.half_twists >= 0, f"half_twists must be >= 0, got {self.half_twists}")
        if self.family == Family.FIGURE_EIGHT:
            validate(self.half_twists == 0, "The figure-eight shadow takes no parameter")

    @property
    def crossing_count(self) -> int:
        match self.family:
            case Family.TWIST_LOOP | Family.FOIL:
                return self.half_twists
            case Family.TWIST_KNOT:
                return self.half_twists + 2
            case Family.FIGURE_EIGHT:
                return 4
        raise ValueError(self.family)


def _twist_run(crossings: list[int]) -> list[Arc]:
    arcs = []
    for left, right in zip(crossings, crossings[1:]):
        arcs.append(((left, NE), (right, NW)))
        arcs.append(((left, SE), (right, SW)))
    return arcs


def _alpha(n: int, arcs: list[Arc]) -> list[Dart]:
    alpha = [-1] * (4 * n)
    for (c1, s1), (c2, s2) in arcs:
        d, e = dart_at(c1, s1), dart_at(c2, s2)
        validate(alpha[d] == -1 and alpha[e] == -1, f"Dart used twice in arc {d}-{e}")
        alpha[d], alpha[e] = e, d
    return alpha


def twist_loop(n: int) -> ShadowDiagram:
    """The n-twist loop, crossings ordered left to right.

    Both ends of the twist band are capped, so the unbounded region runs
    above and below the band.
    """
    if n == 0:
        return make_diagram([], free_loops=1)
    run = list(range(n))
    arcs = _twist_run(run) + [((0, NW), (0, SW)), ((n - 1, NE), (n - 1, SE))]
    return make_diagram(_alpha(n, arcs), outer_dart=dart_at(0, NW))


def foil(n: int) -> ShadowDiagram:
    """The n-foil: the band closed by one arc over the top and one underneath.

    The crossing order starts at the crossing next to the left end of the
    closing arcs. The unbounded region lies above the top arc.
    """
    if n == 0:
        return make_diagram([], free_loops=2)
    run = list(range(n))
    arcs = _twist_run(run) + [((0, NW), (n - 1, NE)), ((0, SW), (n - 1, SE))]
    return make_diagram(_alpha(n, arcs), outer_dart=dart_at(0, NW))


def _twist_knot_arcs(n: int) -> list[Arc]:
    outer, inner = 0, 1
    clasp = [((outer, SW), (inner, NW)), ((outer, SE), (inner, NE))]
    if n == 0:
        return clasp + [((outer, NE), (outer, NW)), ((inner, SE), (inner, SW))]
    run = list(range(2, n + 2))
    first, last = run[0], run[-1]
    return (
        _twist_run(run)
        + clasp
        + [
            ((first, NW), (outer, NE)),
            ((first, SW), (inner, SE)),
            ((last, NE), (outer, NW)),
            ((last, SE), (inner, SW)),
        ]
    )


def twist_knot(n: int) -> ShadowDiagram:
    """The n-twist knot: the two clasp crossings first, then the twists."""
    arcs = _twist_knot_arcs(n)
    return make_diagram(_alpha(n + 2, arcs), outer_dart=dart_at(0, NW))


def figure_eight() -> ShadowDiagram:
    """Four-crossing figure-eight shadow.

    Same arcs as the 2-twist knot, redrawn so that the unbounded region is
    the one west of the first twist crossing.
    """
    arcs = _twist_knot_arcs(2)
    return make_diagram(_alpha(4, arcs), outer_dart=dart_at(2, SW))


def build(spec: FamilySpec) -> ShadowDiagram:
    match spec.family:
        case Family.TWIST_LOOP:
            return twist_loop(spec.half_twists)
        case Family.FOIL:
            return foil(spec.half_twists)
        case Family.TWIST_KNOT:
            return twist_knot(spec.half_twists)
        case Family.FIGURE_EIGHT:
            return figure_eight()
    raise ValueError(f"Unknown family {spec.family}")


def build_family(name: str, n: int = 0) -> ShadowDiagram:
    return build(FamilySpec(Family(name), n))


def crossing_labels(spec: FamilySpec) -> list[str]:
    match spec.family:
        case Family.TWIST_LOOP | Family.FOIL:
            return [f"twist-{i + 1}" for i in range(spec.half_twists)]
        case Family.TWIST_KNOT:
            return ["link-outer", "link-inner"] + [
                f"twist-{i + 1}" for i in range(spec.half_twists)
            ]
        case Family.FIGURE_EIGHT:
            return [f"c{i + 1}" for i in range(4)]
    raise ValueError(f"Unknown family {spec.family}")
