"""Intersection numbers of round curves from explicit polygons.

This is an independent check on :func:`braid_sections.curves.geometric_intersection` that
shares no code with the coordinate machinery. Punctures sit at ``(p, 0)``, the segment L
runs along ``y = -1`` below all of them, and the round curve on a subset is drawn as the
boundary of a neighbourhood of L together with a vertical tooth up to each puncture of the
subset. Two curves get different neighbourhood radii, so every crossing is transverse.
Crossings are then removed in pairs across empty bigons until none are left, at which
point the two polygons are in minimal position.

Coordinates are integers in units of ``1 / SCALE`` so all arithmetic is exact.
"""
from dataclasses import dataclass
import logging
from typing import List, Tuple

from .curves import RoundCurveSpec

LOGGER = logging.getLogger(__name__)

SCALE = 15
FIRST_RADIUS = 5
SECOND_RADIUS = 3

Point = Tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    """A transverse crossing, located on both polygons by ``(edge, distance from edge start)``."""

    point: Point
    first: Tuple[int, int]
    second: Tuple[int, int]


def comb_polygon(spec: RoundCurveSpec, radius: int) -> List[Point]:
    """Vertices, in order, of the round curve on ``spec`` drawn at the given radius."""
    low = -SCALE
    left, right = SCALE - radius, SCALE * spec.n + radius
    points = [(left, low - radius), (right, low - radius), (right, low + radius)]
    for s in reversed(spec.subset):
        x = SCALE * s
        points += [(x + radius, low + radius), (x + radius, radius), (x - radius, radius), (x - radius, low + radius)]
    points.append((left, low + radius))
    out: List[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    if out[0] == out[-1]:
        out.pop()
    return out


def _distance(a: Point, b: Point) -> int:
    return abs(b[0] - a[0]) + abs(b[1] - a[1])


def crossings(first: List[Point], second: List[Point]) -> List[Crossing]:
    """All transverse crossings between two axis-parallel polygons."""
    found = []
    for e, p0 in enumerate(first):
        p1 = first[(e + 1) % len(first)]
        for f, q0 in enumerate(second):
            q1 = second[(f + 1) % len(second)]
            if p0[1] == p1[1] and q0[0] == q1[0]:
                x, y = q0[0], p0[1]
                hits = (x - p0[0]) * (x - p1[0]) < 0 and (y - q0[1]) * (y - q1[1]) < 0
            elif p0[0] == p1[0] and q0[1] == q1[1]:
                x, y = p0[0], q0[1]
                hits = (x - q0[0]) * (x - q1[0]) < 0 and (y - p0[1]) * (y - p1[1]) < 0
            else:
                continue
            if hits:
                point = (x, y)
                found.append(Crossing(point, (e, _distance(p0, point)), (f, _distance(q0, point))))
    return found


def _arc(polygon: List[Point], start: Tuple[int, int], start_point: Point, end: Tuple[int, int], end_point: Point) -> List[Point]:
    """The polygon path from one crossing forward to another, both endpoints included."""
    if start[0] == end[0] and end[1] > start[1]:
        return [start_point, end_point]
    m = len(polygon)
    path = [start_point]
    edge = start[0]
    while True:
        edge += 1
        path.append(polygon[edge % m])
        if edge % m == end[0]:
            break
    path.append(end_point)
    return path


def winding_number(loop: List[Point], point: Point) -> int:
    """Winding number of a closed polygonal loop around a point not on it."""
    total = 0
    for t, a in enumerate(loop):
        b = loop[(t + 1) % len(loop)]
        side = (b[0] - a[0]) * (point[1] - a[1]) - (point[0] - a[0]) * (b[1] - a[1])
        if a[1] <= point[1]:
            if b[1] > point[1] and side > 0:
                total += 1
        elif b[1] <= point[1] and side < 0:
            total -= 1
    return total


def _find_bigon(first: List[Point], second: List[Point], active: List[Crossing], punctures: List[Point]):
    along_first = sorted(active, key=lambda c: c.first)
    along_second = sorted(active, key=lambda c: c.second)
    m = len(active)
    next_on_second = {id(c): along_second[(t + 1) % m] for t, c in enumerate(along_second)}
    for t, x in enumerate(along_first):
        y = along_first[(t + 1) % m]
        side = _arc(first, x.first, x.point, y.first, y.point)[:-1]
        # the second side may run along the second polygon in either direction
        loops = []
        if next_on_second[id(y)] is x:
            loops.append(side + _arc(second, y.second, y.point, x.second, x.point))
        if next_on_second[id(x)] is y:
            loops.append(side + list(reversed(_arc(second, x.second, x.point, y.second, y.point))))
        for loop in loops:
            if all(winding_number(loop, p) == 0 for p in punctures):
                return x, y
    return None


def pl_intersection(spec1: RoundCurveSpec, spec2: RoundCurveSpec) -> int:
    """Geometric intersection number of two round curves, by bigon removal on polygons."""
    if spec1.n != spec2.n:
        raise ValueError(f"Puncture counts differ: {spec1.n} and {spec2.n}")
    first = comb_polygon(spec1, FIRST_RADIUS)
    second = comb_polygon(spec2, SECOND_RADIUS)
    punctures = [(SCALE * p, 0) for p in range(1, spec1.n + 1)]
    active = crossings(first, second)
    LOGGER.debug(f"{spec1.subset} and {spec2.subset} cross {len(active)} times before reduction")
    while len(active) >= 2 and (bigon := _find_bigon(first, second, active, punctures)):
        active = [c for c in active if c is not bigon[0] and c is not bigon[1]]
    return len(active)
