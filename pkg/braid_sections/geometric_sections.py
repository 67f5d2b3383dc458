"""Adding a point to a configuration continuously: next to an existing point, or near infinity.

Planar configurations are exact (sympy numbers) or double precision; sphere configurations are
double precision with unit vectors checked to within ``UNIT_TOLERANCE``. The new point is
always prepended, so forgetting the first point gives back the input unchanged.

The plane is identified with the sphere minus the north pole ``N = (0, 0, 1)`` by
stereographic projection from ``N``.
"""
from dataclasses import dataclass
import logging
import math
from typing import Any, List, Optional, Sequence, Tuple, Union

import fortranformat as ff
import numpy as np
import sympy

from .keys import *

LOGGER = logging.getLogger(__name__)

FIGURE_RECORD = "(I4,1X,A6,3(1X,E24.16))"
NORTH_POLE = (0.0, 0.0, 1.0)

Point = Tuple[Any, ...]


def _exact(x: Any) -> Any:
    if isinstance(x, float):
        raise TypeError(f"Exact configurations do not take floating point values, got {x}")
    if isinstance(x, str):
        return sympy.Rational(x)
    return sympy.sympify(x)


@dataclass(frozen=True)
class PlanarConfig:
    """An ordered configuration of distinct points in the plane."""

    points: Tuple[Point, ...]
    exact: bool = False
    """Coordinates are sympy numbers when true, floats otherwise."""

    def __post_init__(self):
        convert = _exact if self.exact else float
        points = []
        for p in self.points:
            if len(p) != 2:
                raise ValueError(f"Planar points have two coordinates, got {p}")
            points.append((convert(p[0]), convert(p[1])))
        for t, p in enumerate(points):
            for q in points[t + 1 :]:
                if p == q:
                    raise ValueError(f"Point {p} appears twice in the configuration")
        object.__setattr__(self, "points", tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in p] for p in self.points], dtype=float).reshape(-1, 2)


@dataclass(frozen=True)
class SphereConfig:
    """An ordered configuration of distinct unit vectors in R^3."""

    points: Tuple[Point, ...]

    def __post_init__(self):
        points = tuple(tuple(float(x) for x in p) for p in self.points)
        for p in points:
            if len(p) != 3:
                raise ValueError(f"Sphere points have three coordinates, got {p}")
            if abs(np.linalg.norm(p) - 1.0) > UNIT_TOLERANCE:
                raise ValueError(f"Point {p} is not a unit vector")
        for t, p in enumerate(points):
            for q in points[t + 1 :]:
                if sphere_distance(p, q) == 0.0:
                    raise ValueError(f"Point {p} appears twice in the configuration")
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float).reshape(-1, 3)


Config = Union[PlanarConfig, SphereConfig]


def sphere_distance(u: Sequence[float], v: Sequence[float]) -> float:
    """Great circle distance between unit vectors."""
    u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
    return float(np.arctan2(np.linalg.norm(np.cross(u, v)), np.dot(u, v)))


def stereographic_lift(p: Point) -> Point:
    """The point of the unit sphere projecting to ``p``; exact when ``p`` is."""
    x, y = p
    r2 = x * x + y * y
    return (2 * x / (r2 + 1), 2 * y / (r2 + 1), (r2 - 1) / (r2 + 1))


def stereographic_projection(X: Point) -> Point:
    """Project a point of the sphere other than the north pole to the plane."""
    x, y, z = X
    if z == 1:
        raise ValueError("The north pole projects to infinity")
    return (x / (1 - z), y / (1 - z))


def _check_planar_direction(cfg: PlanarConfig, direction: Sequence[Any]) -> Point:
    if len(direction) != 2:
        raise ValueError(f"A planar direction has two coordinates, got {direction}")
    if cfg.exact:
        v = (_exact(direction[0]), _exact(direction[1]))
        if sympy.simplify(v[0] ** 2 + v[1] ** 2 - 1) != 0:
            raise ValueError(f"Direction {direction} is not a unit vector")
        return v
    v = (float(direction[0]), float(direction[1]))
    if abs(math.hypot(*v) - 1.0) > UNIT_TOLERANCE:
        raise ValueError(f"Direction {direction} is not a unit vector")
    return v


def epsilon_pairwise(cfg: Config) -> Any:
    """Half the smallest distance between two points of the configuration."""
    if len(cfg) < 2:
        raise ValueError(f"Need at least 2 points, got {len(cfg)}")
    if isinstance(cfg, SphereConfig):
        return min(sphere_distance(p, q) for t, p in enumerate(cfg.points) for q in cfg.points[t + 1 :]) / 2
    if cfg.exact:
        smallest = min(
            (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for t, p in enumerate(cfg.points) for q in cfg.points[t + 1 :]
        )
        return sympy.sqrt(smallest) / 2
    points = cfg.as_array()
    gaps = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
    return float(gaps[np.triu_indices(len(cfg), k=1)].min() / 2)


def epsilon_infinity(cfg: PlanarConfig) -> Any:
    """Half the smallest spherical distance from a lifted point to the north pole.

    A point at distance ``r`` from the origin lies at ``2 acot(r)`` from the pole, so the
    exact value is ``acot(R)`` for the largest norm ``R``.
    """
    if len(cfg) < 1:
        raise ValueError("Need at least 1 point")
    if cfg.exact:
        farthest = max(p[0] ** 2 + p[1] ** 2 for p in cfg.points)
        return sympy.acot(sympy.sqrt(farthest))
    return min(sphere_distance(stereographic_lift(p), NORTH_POLE) for p in cfg.points) / 2


def _check_index(cfg: Config, k: int):
    if not 1 <= k <= len(cfg):
        raise ValueError(f"Point {k} is not in 1..{len(cfg)}")


def add_near_k(cfg: Config, k: int, direction: Sequence[Any]) -> Config:
    """Prepend the point reached by flowing from ``x_k`` along ``direction`` for time epsilon.

    In the plane the flow is the straight line; on the sphere it is the great circle through
    ``x_k`` with initial velocity ``direction``, which must be tangent there.
    """
    _check_index(cfg, k)
    eps = epsilon_pairwise(cfg)
    if isinstance(cfg, SphereConfig):
        x = np.array(cfg.points[k - 1])
        v = np.asarray(direction, dtype=float)
        if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > UNIT_TOLERANCE:
            raise ValueError(f"Direction {direction} is not a unit vector")
        if abs(np.dot(x, v)) > UNIT_TOLERANCE:
            raise ValueError(f"Direction {direction} is not tangent to the sphere at {tuple(x)}")
        new = np.cos(eps) * x + np.sin(eps) * v
        new = new / np.linalg.norm(new)
        return SphereConfig((tuple(new),) + cfg.points)
    v = _check_planar_direction(cfg, direction)
    x = cfg.points[k - 1]
    new = (x[0] + eps * v[0], x[1] + eps * v[1])
    LOGGER.debug(f"New point {new} at distance {eps} from point {k}")
    return PlanarConfig((new,) + cfg.points, cfg.exact)


def add_at_infinity(cfg: PlanarConfig, direction: Sequence[Any]) -> PlanarConfig:
    """Prepend the point reached by flowing from the north pole along ``direction`` for time epsilon.

    ``direction`` is a unit tangent vector at the north pole, written in the plane's
    coordinates. In exact mode the projected point is ``v (R + sqrt(R^2 + 1))``, which is
    ``v cot(eps / 2)`` for ``eps = acot(R)``.
    """
    v = _check_planar_direction(cfg, direction)
    if cfg.exact:
        farthest = sympy.sqrt(max(p[0] ** 2 + p[1] ** 2 for p in cfg.points)) if len(cfg) else None
        if farthest is None:
            raise ValueError("Need at least 1 point")
        scale = farthest + sympy.sqrt(farthest**2 + 1)
        new = (v[0] * scale, v[1] * scale)
    else:
        eps = epsilon_infinity(cfg)
        lifted = np.cos(eps) * np.array(NORTH_POLE) + np.sin(eps) * np.array([v[0], v[1], 0.0])
        new = stereographic_projection(tuple(float(x) for x in lifted))
    LOGGER.debug(f"New point {new} near infinity")
    return PlanarConfig((new,) + cfg.points, cfg.exact)


def _to_riemann(p: Point) -> Optional[complex]:
    if p[2] >= 1.0 - UNIT_TOLERANCE:
        return None
    x, y = stereographic_projection(p)
    return complex(x, y)


def _from_riemann(z: Optional[complex]) -> Point:
    if z is None:
        return NORTH_POLE
    return tuple(float(x) for x in stereographic_lift((z.real, z.imag)))


def mobius_image(x1: Optional[complex], x2: Optional[complex], x3: Optional[complex], a: complex) -> Optional[complex]:
    """``phi(a)`` for the Möbius map with ``phi(0) = x1``, ``phi(1) = x2``, ``phi(inf) = x3``.

    ``None`` stands for infinity.
    """
    if x3 is None:
        return x1 + (x2 - x1) * a  # type: ignore
    if x1 is None:
        return (x3 * a - x3 + x2) / a  # type: ignore
    if x2 is None:
        return (x3 * a - x1) / (a - 1)
    denominator = (x2 - x1) * a + (x3 - x2)
    if denominator == 0:
        return None
    return (x3 * (x2 - x1) * a + x1 * (x3 - x2)) / denominator


def add_mobius(cfg: SphereConfig, a: complex = -1) -> SphereConfig:
    """Prepend ``phi(a)``, where ``phi`` is the Möbius map taking ``0, 1, inf`` to the three points.

    :param a: any point of the Riemann sphere other than ``0``, ``1`` and infinity
    """
    if len(cfg) != 3:
        raise ValueError(f"The Möbius section needs exactly 3 points, got {len(cfg)}")
    a = complex(a)
    if a in (0, 1) or not np.isfinite(a):
        raise ValueError(f"The Möbius parameter must avoid 0, 1 and infinity, got {a}")
    x1, x2, x3 = (_to_riemann(p) for p in cfg.points)
    new = _from_riemann(mobius_image(x1, x2, x3, a))
    return SphereConfig((new,) + cfg.points)


def forget_first(cfg: Config) -> Config:
    """Delete the prepended point."""
    if len(cfg) < 1:
        raise ValueError("Cannot forget a point of an empty configuration")
    if isinstance(cfg, SphereConfig):
        return SphereConfig(cfg.points[1:])
    return PlanarConfig(cfg.points[1:], cfg.exact)


def _rows(cfg: Config) -> List[Tuple[float, float, float]]:
    if isinstance(cfg, SphereConfig):
        return [tuple(p) for p in cfg.points]  # type: ignore
    return [(float(p[0]), float(p[1]), 0.0) for p in cfg.points]


def figure_records(before: Config, after: Config) -> List[str]:
    """Fixed-width records ``index, label, x, y, z``; planar points have ``z = 0``."""
    writer = ff.FortranRecordWriter(FIGURE_RECORD)
    records = [writer.write([t, "before", *p]) for t, p in enumerate(_rows(before), start=1)]
    records += [writer.write([t, "after", *p]) for t, p in enumerate(_rows(after))]
    return records


def write_figure_data(before: Config, after: Config, path: str):
    with open(path, "w") as f:
        f.write("\n".join(figure_records(before, after)) + "\n")


def render_svg(before: Config, after: Config, size: int = 400) -> str:
    """Draw both configurations; the added point is red.

    Sphere configurations are drawn by orthogonal projection to the ``xy`` plane.
    """
    points = np.array([p[:2] for p in _rows(after)], dtype=float)
    old = np.array([p[:2] for p in _rows(before)], dtype=float).reshape(-1, 2)
    low, high = points.min(axis=0), points.max(axis=0)
    span = max(float((high - low).max()), 1.0)
    margin = 20

    def place(p) -> Tuple[float, float]:
        x = margin + (p[0] - low[0]) / span * (size - 2 * margin)
        y = size - margin - (p[1] - low[1]) / span * (size - 2 * margin)
        return x, y

    shapes = []
    if isinstance(after, SphereConfig):
        cx, cy = place((0.0, 0.0))
        shapes.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{(size - 2 * margin) / span:.3f}" fill="none" stroke="grey"/>')
    for t, p in enumerate(old, start=1):
        x, y = place(p)
        shapes.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="black"/>')
        shapes.append(f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-size="12">{t}</text>')
    x, y = place(points[0])
    shapes.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="red"/>')
    shapes.append(f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-size="12" fill="red">0</text>')
    body = "\n  ".join(shapes)
    return f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">\n  {body}\n</svg>\n'
