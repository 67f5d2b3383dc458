"""Dehn twists as braid words, the lantern relation and the trace criterion for products of two twists."""
from dataclasses import dataclass
import enum
import logging
import time
from typing import Dict, List, Sequence, Tuple, Union

from . import braid_core, curves
from .braid_core import BraidWord
from .curves import Curve, Puncture
from .keys import *
from .verdict import Verdict

LOGGER = logging.getLogger(__name__)

Boundary = Union[Curve, Puncture]


def twist_word(c: Boundary) -> BraidWord:
    """A pure word for the positive Dehn twist about ``c``.

    The twist about the round curve on punctures ``i..j`` is the full twist of those strands;
    the twist about ``u(c)`` is ``u T_c u^-1``. The twist about a single puncture is trivial
    and comes back as the empty word.
    """
    if isinstance(c, Puncture):
        LOGGER.warning(f"The twist about puncture {c.index} is trivial")
        return braid_core.identity(c.n)
    if c.peripheral:
        LOGGER.info("Twisting about the peripheral curve, which is central")
    (i, j), carrier = curves.find_carrier(c).carrier()
    return braid_core.compose(
        braid_core.compose(carrier, braid_core.full_twist(c.n, i, j)),
        braid_core.inverse(carrier),
    )


def is_trivial_twist(c: Boundary) -> bool:
    """Whether the twist about ``c`` is trivial as a mapping class."""
    return isinstance(c, Puncture)


def product_of_twists(cs: Sequence[Boundary], n: int) -> BraidWord:
    """``T_(c_1) T_(c_2) ... T_(c_m)``; the last twist acts first."""
    word = braid_core.identity(n)
    for c in cs:
        if c.n != n:
            raise ValueError(f"Expected curves on {n} punctures, got one on {c.n}")
        word = braid_core.compose(word, twist_word(c))
    return word


def twists_commute(c: Curve, d: Curve) -> bool:
    tc, td = twist_word(c), twist_word(d)
    return braid_core.equals(braid_core.compose(tc, td), braid_core.compose(td, tc))


def _name(c: Boundary) -> str:
    if isinstance(c, Puncture):
        return f"x{c.index}"
    if c.spec is not None and not c.conjugator:
        return "a" + "".join(str(p) for p in c.spec.subset)
    return f"curve{list(c.coords)}"


def _check_lantern_configuration(n: int, inner: Sequence[Curve], boundaries: Sequence[Boundary]) -> Dict[str, int]:
    intersections: Dict[str, int] = {}
    for c in list(inner) + list(boundaries):
        if c.n != n:
            raise ValueError(f"Expected curves on {n} punctures, got {_name(c)} on {c.n}")
    for t, x in enumerate(inner):
        for y in inner[t + 1 :]:
            count = curves.geometric_intersection(x, y)
            intersections[f"{_name(x)},{_name(y)}"] = count
            if count == 0:
                raise ValueError(f"Lantern curves {_name(x)} and {_name(y)} must intersect")
    punctures = [b.index for b in boundaries if isinstance(b, Puncture)]
    if len(set(punctures)) != len(punctures):
        raise ValueError(f"Boundary punctures {punctures} repeat")
    boundary_curves = [b for b in boundaries if isinstance(b, Curve)]
    for t, b in enumerate(boundary_curves):
        for other in boundary_curves[t + 1 :] + list(inner):
            if curves.geometric_intersection(b, other) != 0:
                raise ValueError(f"Boundary curve {_name(b)} meets {_name(other)}")
    return intersections


def verify_lantern(n: int, x: Curve, y: Curve, z: Curve, b1: Boundary, b2: Boundary, b3: Boundary, b4: Boundary) -> Verdict:
    """Check ``T_x T_y T_z = T_b1 T_b2 T_b3 T_b4`` in PB_n.

    Boundary components around a single puncture may be given as :class:`Puncture`.

    :raise ValueError: if the curves are not arranged as in a lantern
    """
    started = time.perf_counter()
    inner, boundaries = [x, y, z], [b1, b2, b3, b4]
    intersections = _check_lantern_configuration(n, inner, boundaries)
    lhs = product_of_twists(inner, n)
    rhs = product_of_twists(boundaries, n)
    lk_lhs, lk_rhs = braid_core.linking_matrix(lhs), braid_core.linking_matrix(rhs)
    holds = lk_lhs == lk_rhs and braid_core.equals(lhs, rhs)
    claim = "".join(f"T_{_name(c)}" for c in inner) + "=" + "".join(f"T_{_name(c)}" for c in boundaries)
    witness = {
        "n": n,
        "lhs": lhs.letters_string(),
        "rhs": rhs.letters_string(),
        "linking_lhs": lk_lhs.entries,
        "linking_rhs": lk_rhs.entries,
        "intersections": intersections,
        "trivial_boundaries": [_name(b) for b in boundaries if is_trivial_twist(b)],
        "central_boundaries": [_name(b) for b in boundaries if isinstance(b, Curve) and b.peripheral],
    }
    LOGGER.info(f"Lantern {claim} in PB_{n}: {'holds' if holds else 'fails'}")
    return Verdict.fromcheck(claim, holds, witness, started)


@dataclass(frozen=True)
class LanternPreset:
    """A lantern relation given by round curves, usable in any PB_n with ``n >= minimum_n``."""

    name: str
    minimum_n: int
    inner: Tuple[Tuple[int, ...], ...]
    boundaries: Tuple[Tuple[int, ...], ...]
    """Subsets; a single index stands for a puncture."""

    def curves(self, n: int = 0) -> Tuple[List[Curve], List[Boundary]]:
        n = n or self.minimum_n
        if n < self.minimum_n:
            raise ValueError(f"Lantern {self.name} needs at least {self.minimum_n} strands, got {n}")

        def build(subset: Tuple[int, ...]) -> Boundary:
            if len(subset) == 1:
                return Puncture(n, subset[0])
            return curves.round_curve_on(n, *subset)

        return [build(s) for s in self.inner], [build(s) for s in self.boundaries]  # type: ignore

    def verify(self, n: int = 0) -> Verdict:
        inner, boundaries = self.curves(n)
        return verify_lantern(n or self.minimum_n, *inner, *boundaries)


LANTERN_PRESETS = {
    LANTERN_SUBCASE3: LanternPreset(
        LANTERN_SUBCASE3, 3, ((1, 2), (2, 3), (1, 3)), ((1,), (2,), (3,), (1, 2, 3))
    ),
    LANTERN_CASE1: LanternPreset(
        LANTERN_CASE1, 4, ((1, 3), (3, 4), (1, 4)), ((1,), (3,), (4,), (1, 3, 4))
    ),
    LANTERN_CASE3: LanternPreset(
        LANTERN_CASE3, 4, ((1, 2, 3), (3, 4), (1, 2, 4)), ((1, 2), (3,), (4,), (1, 2, 3, 4))
    ),
}


def lantern_presets() -> Dict[str, LanternPreset]:
    return dict(LANTERN_PRESETS)


@dataclass(frozen=True)
class TwoByTwoMatrix:
    """An integer 2x2 matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "TwoByTwoMatrix") -> "TwoByTwoMatrix":
        return TwoByTwoMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]


class ProductType(enum.Enum):
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class ProductClassification:
    kind: ProductType
    trace: int


def _check_filling(i: int):
    if i < 1:
        raise ValueError(f"Curves with intersection number {i} do not fill a subsurface")


def thurston_matrices(i: int) -> Tuple[TwoByTwoMatrix, TwoByTwoMatrix]:
    """Images of ``T_a`` and ``T_b`` for curves with ``i(a, b) = i`` filling a subsurface."""
    _check_filling(i)
    return TwoByTwoMatrix(1, -i, 0, 1), TwoByTwoMatrix(1, 0, i, 1)


def thurston_product(i: int) -> TwoByTwoMatrix:
    ta, tb = thurston_matrices(i)
    return ta @ tb


def classify_product_type(i: int) -> ProductClassification:
    """Classify ``T_a T_b`` by the trace ``2 - i^2`` of its image.

    ``i = 2`` is the parabolic case, where the product is a multitwist.
    """
    trace = thurston_product(i).trace
    if abs(trace) < 2:
        kind = ProductType.ELLIPTIC
    elif abs(trace) == 2:
        kind = ProductType.PARABOLIC
    else:
        kind = ProductType.HYPERBOLIC
    return ProductClassification(kind, trace)
