"""Rosettes: n congruent circles of radius r > 1 centred on the unit circle.

Regions are found by sampling. Every bounded region of an arrangement with
at least two circles has an intersection vertex on its boundary, so probing
a tiny neighbourhood of each vertex (plus the centre and a far point) meets
every region. A probe is only trusted when it keeps a clearance of
``delta * CLEARANCE_FRACTION`` from every circle.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import drawsvg as draw
import numpy as np

from shadow_states.common import ToleranceError, Word, validate
from shadow_states.state_words import WordSet, extend_P

DEFAULT_RADIUS = 1.5
DEFAULT_DELTA = 1e-6
COINCIDENCE_TOL = 1e-9
CLEARANCE_FRACTION = 1 / 4
COMPASS_DIRECTIONS = 16

TWO_PI = 2 * math.pi


@dataclass(frozen=True, eq=False)
class Rosette:
    angles: np.ndarray
    r: float = DEFAULT_RADIUS

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=np.float64)
        object.__setattr__(self, "angles", angles)
        validate(self.r > 1, f"Radius must be > 1, got {self.r}")
        validate(angles.ndim == 1 and len(angles) >= 1, "A rosette needs a circle")
        validate(
            bool(np.all((angles >= 0) & (angles < TWO_PI))),
            "Centre angles must lie in [0, 2pi)",
        )
        validate(
            bool(np.all(np.diff(angles) > COINCIDENCE_TOL)),
            "Centre angles must be strictly increasing (counterclockwise order)",
        )

    @classmethod
    def regular(cls, n: int, r: float = DEFAULT_RADIUS) -> "Rosette":
        validate(n >= 1, f"n must be >= 1, got {n}")
        return cls(TWO_PI * np.arange(n) / n, r)

    @classmethod
    def from_angles(cls, angles: Sequence[float], r: float = DEFAULT_RADIUS) -> "Rosette":
        """Centres at arbitrary counterclockwise angles on the unit circle."""
        return cls(np.asarray(angles, dtype=np.float64), r)

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def centers(self) -> np.ndarray:
        return np.column_stack([np.cos(self.angles), np.sin(self.angles)])


@dataclass(frozen=True)
class Vertex:
    x: float
    y: float
    circles: tuple[int, int]

    @property
    def point(self) -> np.ndarray:
        return np.array([self.x, self.y])


def _pair_points(c1: np.ndarray, c2: np.ndarray, r: float) -> tuple[np.ndarray, np.ndarray]:
    """Both crossing points of two circles of radius r; the first lies left
    of the directed line c1 -> c2."""
    offset = c2 - c1
    d = float(np.linalg.norm(offset))
    mid = (c1 + c2) / 2
    h = math.sqrt(r * r - d * d / 4)
    normal = np.array([-offset[1], offset[0]]) / d
    return mid + h * normal, mid - h * normal


def intersections(rosette: Rosette) -> list[Vertex]:
    """All n(n - 1) intersection vertices, two per pair of circles."""
    centers = rosette.centers
    vertices = []
    for i, j in itertools.combinations(range(rosette.n), 2):
        for p in _pair_points(centers[i], centers[j], rosette.r):
            vertices.append(Vertex(float(p[0]), float(p[1]), (i, j)))
    return vertices


def _distances(rosette: Rosette, points: np.ndarray) -> np.ndarray:
    return np.linalg.norm(points[:, None, :] - rosette.centers[None, :, :], axis=2)


def codes_of(rosette: Rosette, points: np.ndarray) -> list[Word]:
    inside = _distances(rosette, points) < rosette.r
    return ["".join("1" if b else "0" for b in row) for row in inside]


def clearance(rosette: Rosette, points: np.ndarray) -> np.ndarray:
    return np.abs(_distances(rosette, points) - rosette.r).min(axis=1)


def _compass_directions() -> np.ndarray:
    """Unit vectors of the compass rose, counterclockwise from east."""
    angles = TWO_PI * np.arange(COMPASS_DIRECTIONS) / COMPASS_DIRECTIONS
    return np.column_stack([np.cos(angles), np.sin(angles)])


def sample_regions(
    rosette: Rosette, delta: float = DEFAULT_DELTA
) -> dict[Word, np.ndarray]:
    """One trusted probe point per region code, keyed by code.

    Raises:
        ToleranceError: If every probe around some vertex is too close to a
            circle; a smaller delta may help.
    """
    threshold = delta * CLEARANCE_FRACTION
    far = 10 * (1 + rosette.r)
    directions = _compass_directions()
    batches = [np.array([[0.0, 0.0], [far, 0.0]])]
    for vertex in intersections(rosette):
        probes = vertex.point + delta * directions
        kept = probes[clearance(rosette, probes) > threshold]
        if len(kept) == 0:
            raise ToleranceError(
                f"All {COMPASS_DIRECTIONS} probes around vertex ({vertex.x:.6f}, "
                f"{vertex.y:.6f}) of circles {vertex.circles} are within {threshold:g} "
                "of a circle; try a smaller delta"
            )
        if len(kept) < len(probes) // 2:
            logging.warning(
                "Only %d of %d probes kept around vertex %s", len(kept), len(probes), vertex.circles
            )
        batches.append(kept)

    points = np.vstack(batches)
    samples: dict[Word, np.ndarray] = {}
    for code, point in zip(codes_of(rosette, points), points):
        samples.setdefault(code, point)
    return {code: samples[code] for code in sorted(samples)}


def region_codes(rosette: Rosette, delta: float = DEFAULT_DELTA) -> WordSet:
    return WordSet.of(rosette.n, sample_regions(rosette, delta))


def euler_region_count(rosette: Rosette) -> int:
    """Faces of the arrangement by Euler's formula, F = E - V + 2.

    Each circle is cut into as many arcs as it carries vertices.
    """
    if rosette.n == 1:
        return 2
    vertices = intersections(rosette)
    on_circle = [0] * rosette.n
    for v in vertices:
        for c in v.circles:
            on_circle[c] += 1
    edges = sum(on_circle)
    return edges - len(vertices) + 2


def lune_codes(rosette: Rosette, i: int, delta: float = DEFAULT_DELTA) -> WordSet:
    """Codes of the regions inside circle i but outside circle i - 1.

    Circles are numbered from 1 and circle 0 means circle n.
    """
    n = rosette.n
    validate(n >= 3, f"Lunes need at least 3 circles, got {n}")
    validate(1 <= i <= n, f"Circle index must be in 1..{n}, got {i}")
    previous = n if i == 1 else i - 1
    codes = region_codes(rosette, delta)
    return WordSet.of(n, (w for w in codes if w[i - 1] == "1" and w[previous - 1] == "0"))


def expected_lune_codes(n: int, i: int) -> WordSet:
    """Cyclic runs of 1s of length 1..n-1 starting at position i."""
    words = []
    for length in range(1, n):
        bits = ["0"] * n
        for step in range(length):
            bits[(i - 1 + step) % n] = "1"
        words.append("".join(bits))
    return WordSet.of(n, words)


def general_position_violations(
    rosette: Rosette, tol: float = COINCIDENCE_TOL
) -> list[str]:
    """Vertices lying on a third circle, or two vertices that coincide."""
    vertices = intersections(rosette)
    if not vertices:
        return []
    points = np.array([[v.x, v.y] for v in vertices])
    gaps = np.abs(_distances(rosette, points) - rosette.r)
    violations = []
    for index, vertex in enumerate(vertices):
        for c in range(rosette.n):
            if c not in vertex.circles and gaps[index, c] < tol:
                violations.append(f"vertex of circles {vertex.circles} lies on circle {c}")
    for a, b in itertools.combinations(range(len(vertices)), 2):
        if np.linalg.norm(points[a] - points[b]) < tol:
            violations.append(
                f"vertices of circles {vertices[a].circles} and {vertices[b].circles} coincide"
            )
    return violations


def circle_inside_violations(rosette: Rosette) -> list[tuple[int, int, int]]:
    """Triples (i, j, k) where the crossing points of circles i and j do not
    split as one inside circle k, namely the one on k's side of the chord
    between the centres of i and j."""
    centers = rosette.centers
    violations = []
    for i, j in itertools.combinations(range(rosette.n), 2):
        left, right = _pair_points(centers[i], centers[j], rosette.r)
        offset = centers[j] - centers[i]
        for k in range(rosette.n):
            if k in (i, j):
                continue
            rel = centers[k] - centers[i]
            k_left = offset[0] * rel[1] - offset[1] * rel[0] > 0
            expected_inside, expected_outside = (left, right) if k_left else (right, left)
            inside = np.linalg.norm(expected_inside - centers[k]) < rosette.r
            outside = np.linalg.norm(expected_outside - centers[k]) > rosette.r
            if not (inside and outside):
                violations.append((i, j, k))
    return violations


def new_lune_check(n: int, r: float = DEFAULT_RADIUS, delta: float = DEFAULT_DELTA) -> bool:
    """Add a circle centred halfway between the last centre and the first one
    and compare the sampled codes with the insertion rules."""
    base = Rosette.regular(n, r)
    last = float(base.angles[-1])
    grown = Rosette.from_angles(list(base.angles) + [(last + TWO_PI) / 2], r)
    return region_codes(grown, delta) == extend_P(region_codes(base, delta))


def _label_points(rosette: Rosette, codes: WordSet, delta: float) -> dict[Word, np.ndarray]:
    """Deepest grid point of each region, falling back to its probe."""
    extent = 1 + rosette.r
    xs, ys = np.meshgrid(np.linspace(-extent, extent, 241), np.linspace(-extent, extent, 241))
    grid = np.column_stack([xs.ravel(), ys.ravel()])
    depth = clearance(rosette, grid)
    best: dict[Word, tuple[float, np.ndarray]] = {}
    for code, point, d in zip(codes_of(rosette, grid), grid, depth):
        if code not in best or d > best[code][0]:
            best[code] = (float(d), point)
    probes = sample_regions(rosette, delta)
    return {code: best[code][1] if code in best else probes[code] for code in codes}


def render_svg(
    rosette: Rosette, labels: bool = False, size: int = 600, delta: float = DEFAULT_DELTA
) -> str:
    """Standalone SVG drawing: circles, vertex markers and, when asked, the
    region code printed inside every region."""
    extent = 1 + rosette.r + 0.2
    scale = size / (2 * extent)

    def xy(point) -> tuple[float, float]:
        return float((point[0] + extent) * scale), float((extent - point[1]) * scale)

    d = draw.Drawing(size, size)
    d.append(draw.Rectangle(0, 0, size, size, fill="white"))
    for index, center in enumerate(rosette.centers):
        cx, cy = xy(center)
        d.append(
            draw.Circle(
                cx,
                cy,
                rosette.r * scale,
                fill="none",
                stroke="black",
                stroke_width=1,
                class_="circle",
                id=f"circle-{index + 1}",
            )
        )
    for vertex in intersections(rosette):
        cx, cy = xy(vertex.point)
        d.append(draw.Circle(cx, cy, 2, fill="red", class_="vertex"))
    if labels:
        codes = region_codes(rosette, delta)
        for code, point in _label_points(rosette, codes, delta).items():
            x, y = xy(point)
            d.append(
                draw.Text(
                    code,
                    10,
                    x,
                    y,
                    text_anchor="middle",
                    dominant_baseline="middle",
                    font_family="monospace",
                    class_="region",
                )
            )
    return d.as_svg()
