"""Knot shadows as combinatorial planar maps.

A shadow with n crossings has 4n darts. Dart ``4c + s`` is slot ``s`` of
crossing ``c``; slots are numbered counterclockwise starting from the
north-east strand (0 = NE, 1 = NW, 2 = SW, 3 = SE), so the strands run
straight through a crossing as 0-2 and 1-3. ``alpha`` pairs the two ends of
every arc.

The corner of a dart is the sector between it and its clockwise neighbour:
slot 0 owns the east corner, 1 the north, 2 the west and 3 the south one.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx
from networkx.utils import UnionFind

from shadow_states.common import StructuralError, check_cap, validate

Dart = int
StateWord = str
Pairing = tuple[tuple[int, int], tuple[int, int]]
Color = str

# Smoothings of a crossing, as matchings on slot indices. EAST_WEST joins
# NE with NW and SW with SE, which merges the east and west corners;
# NORTH_SOUTH merges the north and south corners.
EAST_WEST: Pairing = ((0, 1), (2, 3))
NORTH_SOUTH: Pairing = ((1, 2), (3, 0))

A: Color = "A"
B: Color = "B"


def crossing_of(dart: Dart) -> int:
    return dart // 4


def slot_of(dart: Dart) -> int:
    return dart % 4


def dart_at(crossing: int, slot: int) -> Dart:
    return 4 * crossing + slot % 4


def rotate(dart: Dart) -> Dart:
    """Counterclockwise successor of ``dart`` around its crossing."""
    return dart_at(crossing_of(dart), slot_of(dart) + 1)


@dataclass(frozen=True)
class Crossing:
    darts: tuple[Dart, Dart, Dart, Dart]
    a_pairing: Pairing

    @property
    def b_pairing(self) -> Pairing:
        return NORTH_SOUTH if self.a_pairing == EAST_WEST else EAST_WEST

    def pairing(self, bit: str) -> Pairing:
        return self.a_pairing if bit == "0" else self.b_pairing


@dataclass(frozen=True, eq=False)
class ShadowDiagram:
    """Immutable knot shadow.

    Use `make_diagram` to build one: the A-pairings of the crossings are
    derived from the checkerboard colouring there, never passed in.

    Attributes:
        crossings: Crossings in word order.
        alpha: Fixed-point-free involution on darts (the arcs).
        outer_dart: Dart whose corner lies on the unbounded region. None for
            crossingless diagrams.
        free_loops: Number of crossingless components drawn alongside.
    """

    crossings: tuple[Crossing, ...]
    alpha: tuple[Dart, ...]
    outer_dart: Dart | None
    free_loops: int = 0
    face_list: tuple[tuple[Dart, ...], ...] = field(default=(), repr=False)
    face_colors: tuple[Color, ...] = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def darts(self) -> range:
        return range(4 * self.n)

    def arc_of(self, dart: Dart) -> int:
        return min(dart, self.alpha[dart])


def _validate_alpha(alpha: tuple[Dart, ...]):
    validate(len(alpha) % 4 == 0, "Dart count must be a multiple of 4", StructuralError)
    for d, e in enumerate(alpha):
        validate(
            0 <= e < len(alpha), f"Dart {d} is joined to unknown dart {e}", StructuralError
        )
        validate(e != d, f"Dart {d} is a fixed point of alpha", StructuralError)
        validate(
            alpha[e] == d,
            f"alpha is not an involution: {d} -> {e} -> {alpha[e]}",
            StructuralError,
        )


def _trace_faces(alpha: tuple[Dart, ...]) -> list[tuple[Dart, ...]]:
    seen: set[Dart] = set()
    result = []
    for start in range(len(alpha)):
        if start in seen:
            continue
        cycle = []
        d = start
        while d not in seen:
            seen.add(d)
            cycle.append(d)
            d = rotate(alpha[d])
        result.append(tuple(cycle))
    return result


def _face_index(face_list: Iterable[tuple[Dart, ...]]) -> dict[Dart, int]:
    return {d: i for i, face in enumerate(face_list) for d in face}


def _color_faces(
    face_list: list[tuple[Dart, ...]], outer_dart: Dart
) -> tuple[Color, ...]:
    face_of = _face_index(face_list)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(face_list)))
    for d in face_of:
        graph.add_edge(face_of[d], face_of[rotate(d)])

    validate(
        nx.is_connected(graph), "The face graph of a shadow must be connected", StructuralError
    )
    validate(
        nx.is_bipartite(graph),
        "The face graph is not bipartite, the diagram is not a valid shadow",
        StructuralError,
    )
    sides = nx.bipartite.color(graph)
    outer_side = sides[face_of[outer_dart]]
    return tuple(A if sides[i] == outer_side else B for i in range(len(face_list)))


def make_diagram(
    alpha: Iterable[Dart], outer_dart: Dart | None = None, free_loops: int = 0
) -> ShadowDiagram:
    """Build a shadow from its arc involution.

    Args:
        alpha: ``alpha[d]`` is the dart at the other end of the arc leaving d.
        outer_dart: A dart whose corner touches the unbounded region.
        free_loops: Crossingless components that are not part of the map.

    Raises:
        StructuralError: If alpha is not a fixed-point-free involution, or the
            traced faces do not form a checkerboard-colourable sphere map.
    """
    alpha = tuple(alpha)
    _validate_alpha(alpha)
    validate(free_loops >= 0, "free_loops must be nonnegative")
    n = len(alpha) // 4
    if n == 0:
        return ShadowDiagram(crossings=(), alpha=(), outer_dart=None, free_loops=free_loops)

    validate(outer_dart is not None and 0 <= outer_dart < len(alpha), "outer_dart missing")
    assert outer_dart is not None

    face_list = _trace_faces(alpha)
    validate(
        len(face_list) == n + 2,
        f"Face tracing found {len(face_list)} faces, a connected shadow with "
        f"{n} crossings has {n + 2}",
        StructuralError,
    )
    colors = _color_faces(face_list, outer_dart)
    face_of = _face_index(face_list)

    crossings = []
    for c in range(n):
        darts = (dart_at(c, 0), dart_at(c, 1), dart_at(c, 2), dart_at(c, 3))
        corner_colors = [colors[face_of[d]] for d in darts]
        validate(
            corner_colors in ([A, B, A, B], [B, A, B, A]),
            f"Corners of crossing {c} do not alternate: {corner_colors}",
            StructuralError,
        )
        north_is_a = colors[face_of[dart_at(c, 1)]] == A
        crossings.append(
            Crossing(darts=darts, a_pairing=NORTH_SOUTH if north_is_a else EAST_WEST)
        )

    return ShadowDiagram(
        crossings=tuple(crossings),
        alpha=alpha,
        outer_dart=outer_dart,
        free_loops=free_loops,
        face_list=tuple(face_list),
        face_colors=colors,
    )


def faces(diagram: ShadowDiagram) -> list[tuple[Dart, ...]]:
    """Faces of the diagram as dart cycles of ``rotate ∘ alpha``."""
    return list(diagram.face_list)


def corner_face(diagram: ShadowDiagram, dart: Dart) -> int:
    return _face_index(diagram.face_list)[dart]


def checkerboard(diagram: ShadowDiagram) -> tuple[tuple[Color, ...], tuple[Pairing, ...]]:
    """Face colouring (unbounded face is A) and the A-pairing of every crossing."""
    return diagram.face_colors, tuple(c.a_pairing for c in diagram.crossings)


def resolve(diagram: ShadowDiagram, word: StateWord) -> int:
    """Number of loops left after smoothing crossing i as told by ``word[i]``.

    "0" picks the A-split and "1" the B-split.
    """
    validate(
        len(word) == diagram.n,
        f"State word '{word}' has length {len(word)}, diagram has {diagram.n} crossings",
    )
    validate(all(bit in "01" for bit in word), f"'{word}' is not a binary word")

    arcs = UnionFind(diagram.arc_of(d) for d in diagram.darts)
    for crossing, bit in zip(diagram.crossings, word):
        for i, j in crossing.pairing(bit):
            arcs.union(diagram.arc_of(crossing.darts[i]), diagram.arc_of(crossing.darts[j]))
    return sum(1 for _ in arcs.to_sets()) + diagram.free_loops


def all_words(n: int) -> Iterator[StateWord]:
    """All binary words of length n in lexicographic order."""
    if n == 0:
        yield ""
        return
    for i in range(2**n):
        yield format(i, f"0{n}b")


def state_census(
    diagram: ShadowDiagram, max_crossings: int | None = None
) -> dict[int, list[StateWord]]:
    """Group all 2^n state words by the number of loops they resolve to.

    Raises:
        BruteForceCapError: If the diagram has more crossings than the cap.
    """
    check_cap(diagram.n, max_crossings)
    census: dict[int, list[StateWord]] = defaultdict(list)
    for word in all_words(diagram.n):
        census[resolve(diagram, word)].append(word)
    logging.debug("Census of %d crossings: %s", diagram.n, {k: len(v) for k, v in census.items()})
    return {k: census[k] for k in sorted(census)}


def flip(word: StateWord, position: int) -> StateWord:
    bit = "1" if word[position] == "0" else "0"
    return word[:position] + bit + word[position + 1 :]


def flip_deltas(
    diagram: ShadowDiagram, max_crossings: int | None = None
) -> Iterator[tuple[StateWord, int, int]]:
    """Yield ``(word, position, change in loop count)`` for every single-bit flip."""
    check_cap(diagram.n, max_crossings)
    counts = {word: resolve(diagram, word) for word in all_words(diagram.n)}
    for word, count in counts.items():
        for position in range(diagram.n):
            yield word, position, counts[flip(word, position)] - count
