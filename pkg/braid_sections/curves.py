"""Simple closed curves on the n-punctured disk, the braid action on them and intersection numbers.

A :class:`Curve` is stored by its max-plus coordinates (see :mod:`braid_sections.dynnikov`),
which are canonical: two curves are isotopic exactly when their coordinates agree. Curves
built from a round curve also remember how they were built, which is what
:func:`geometric_intersection` and the twist calculus use.
"""
from dataclasses import dataclass, field
import heapq
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import braid_core, dynnikov
from .braid_core import BraidWord

LOGGER = logging.getLogger(__name__)

# sorting braids move strands with letters of this sign, which passes them below L
SORTING_SIGN = -1


@dataclass(frozen=True)
class RoundCurveSpec:
    """The boundary of a neighbourhood of the low segment L and the arcs descending to it from ``subset``."""

    n: int
    subset: Tuple[int, ...]

    def __post_init__(self):
        subset = tuple(sorted(set(int(p) for p in self.subset)))
        if len(subset) != len(tuple(self.subset)):
            raise ValueError(f"Repeated puncture in {self.subset}")
        if len(subset) < 2:
            raise ValueError(
                f"A round curve needs at least two punctures, got {self.subset}; "
                "a curve around one puncture bounds a once-punctured disk"
            )
        if subset[0] < 1 or subset[-1] > self.n:
            raise ValueError(f"Punctures {self.subset} are not all in 1..{self.n}")
        object.__setattr__(self, "subset", subset)

    @property
    def peripheral(self) -> bool:
        return len(self.subset) == self.n

    @property
    def contiguous(self) -> bool:
        return self.subset[-1] - self.subset[0] + 1 == len(self.subset)

    def block(self) -> Tuple[int, int]:
        """The consecutive punctures the sorting braid starts from."""
        return self.subset[0], self.subset[0] + len(self.subset) - 1


@dataclass(frozen=True)
class Puncture:
    """A single puncture, standing in for the inessential curve around it."""

    n: int
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.n:
            raise ValueError(f"Puncture {self.index} is not in 1..{self.n}")


@dataclass(frozen=True)
class Curve:
    """An essential simple closed curve on the n-punctured disk.

    Equality compares the coordinates and the peripheral flag only.
    """

    n: int
    coords: Tuple[int, ...]
    """``(a_1, ..., a_(n-2), b_1, ..., b_(n-2))``; empty when ``n <= 2``."""
    peripheral: bool = False
    spec: Optional[RoundCurveSpec] = field(default=None, compare=False)
    """The round curve this one is an image of, if known."""
    conjugator: Tuple[int, ...] = field(default=(), compare=False)
    """Letters of the braid carrying ``spec`` to this curve."""

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        object.__setattr__(self, "conjugator", tuple(self.conjugator))
        expected = 2 * self.n - 4 if self.n >= 3 else 0
        if len(self.coords) != expected:
            raise ValueError(
                f"A curve on {self.n} punctures has {expected} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def fromcoords(cls, n: int, coords: Sequence[int]) -> "Curve":
        """Construct a curve from bare coordinates, checking it has exactly one component."""
        if n < 3:
            raise ValueError(f"Coordinates describe curves only for n >= 3, got n={n}")
        count = dynnikov.component_count(n, tuple(int(x) for x in coords))
        if count != 1:
            raise ValueError(f"Coordinates {list(coords)} describe {count} components, not one curve")
        return cls(n, tuple(coords))

    @property
    def has_provenance(self) -> bool:
        return self.spec is not None

    def carrier(self) -> Tuple[Tuple[int, int], BraidWord]:
        """A consecutive block ``(i, j)`` and a word carrying its round curve to this one."""
        if self.spec is None:
            raise ValueError("This curve has no known round curve it is the image of")
        i, j = self.spec.block()
        word = braid_core.compose(
            BraidWord(self.n, self.conjugator), sorting_word(self.spec)
        )
        return (i, j), word


def sorting_word(spec: RoundCurveSpec) -> BraidWord:
    """A word carrying the round curve on the block of ``spec`` to the round curve on ``spec.subset``.

    Starting from the block at the first puncture of the subset, the strands are moved right
    one at a time, the last one first, each passing below the punctures it overtakes.
    """
    subset = spec.subset
    positions = list(range(subset[0], subset[0] + len(subset)))
    applied: List[int] = []
    for m in reversed(range(len(subset))):
        while positions[m] < subset[m]:
            applied.append(SORTING_SIGN * positions[m])
            positions[m] += 1
    return BraidWord(spec.n, tuple(reversed(applied)))


def round_curve(spec: RoundCurveSpec) -> Curve:
    """The round curve ``a_S`` on the punctures of ``spec``."""
    n = spec.n
    if n < 3 or spec.peripheral:
        return Curve(n, (0,) * (2 * n - 4 if n >= 3 else 0), peripheral=spec.peripheral, spec=spec)
    i, j = spec.block()
    word = sorting_word(spec)
    coords = dynnikov.act_letters(n, word.letters, dynnikov.round_block(n, i, j))
    return Curve(n, coords, spec=spec)


def round_curve_on(n: int, *subset: int) -> Curve:
    """Shorthand for ``round_curve(RoundCurveSpec(n, subset))``."""
    return round_curve(RoundCurveSpec(n, tuple(subset)))


def _check_same_punctures(n: int, m: int):
    if n != m:
        raise ValueError(f"Puncture counts differ: {n} and {m}")


def act(u: BraidWord, c: Curve) -> Curve:
    """The image ``u(c)``."""
    _check_same_punctures(u.strands, c.n)
    coords = c.coords
    if c.n >= 3 and not c.peripheral:
        coords = dynnikov.act_letters(c.n, u.letters, coords)
    conjugator = u.letters + c.conjugator if c.spec is not None else ()
    return Curve(c.n, coords, c.peripheral, c.spec, conjugator)


def is_isotopic(c1: Curve, c2: Curve) -> bool:
    _check_same_punctures(c1.n, c2.n)
    return c1 == c2


def block_mover(n: int, i: int, j: int) -> BraidWord:
    """A word carrying the round curve on ``1..k`` to the round curve on ``i..j``, ``k = j - i + 1``."""
    k = j - i + 1
    applied: List[int] = []
    start = 1
    for _ in range(i - 1):
        applied.extend(range(start + k - 1, start - 1, -1))
        start += 1
    return BraidWord(n, tuple(reversed(applied)))


def _intersection_with_carried(c: Curve, other: Curve) -> int:
    (i, j), word = c.carrier()
    g = braid_core.compose(word, block_mover(c.n, i, j))
    moved = dynnikov.act_letters(c.n, braid_core.inverse(g).letters, other.coords)
    return dynnikov.left_block_intersection(c.n, moved, j - i + 1)


def _round_blocks(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) != (1, n)]


def find_carrier(c: Curve, max_states: int = 200000) -> Curve:
    """Recover a round curve and a conjugating word for a curve given only by coordinates.

    A best-first search over single Artin letters, lowest :func:`dynnikov.complexity` first,
    until a round curve on consecutive punctures is reached. Letters that raise the complexity
    are allowed, so the search does not stall where no single letter lowers it.

    :raise ValueError: if no round curve is found among ``max_states`` visited coordinates
    """
    if c.has_provenance:
        return c
    n = c.n
    blocks = {dynnikov.round_block(n, i, j): (i, j) for i, j in _round_blocks(n)}
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    # coordinates -> (previous coordinates, letter applied to them)
    came_from: Dict[Tuple[int, ...], Optional[Tuple[Tuple[int, ...], int]]] = {c.coords: None}
    order = itertools.count()
    queue = [(dynnikov.complexity(c.coords), next(order), c.coords)]
    while queue and len(came_from) <= max_states:
        _, _, coords = heapq.heappop(queue)
        if coords in blocks:
            i, j = blocks[coords]
            applied: List[int] = []
            while (step := came_from[coords]) is not None:
                coords, letter = step
                applied.append(letter)
            # newest letter first, which is the reducing word in functional order
            back = braid_core.inverse(BraidWord(n, tuple(applied)))
            LOGGER.debug(f"Reduced {c.coords} to the block {i}..{j} with {len(applied)} letters")
            spec = RoundCurveSpec(n, tuple(range(i, j + 1)))
            return Curve(n, c.coords, False, spec, back.letters)
        for letter in letters:
            moved = dynnikov.act_letter(n, coords, letter)
            if moved not in came_from:
                came_from[moved] = (coords, letter)
                heapq.heappush(queue, (dynnikov.complexity(moved), next(order), moved))
    raise ValueError(f"Could not reduce the curve {c.coords} to a round curve within {max_states} states")


def geometric_intersection(c1: Curve, c2: Curve) -> int:
    """Minimal number of intersection points between curves isotopic to ``c1`` and ``c2``."""
    _check_same_punctures(c1.n, c2.n)
    if c1.n < 3 or c1.peripheral or c2.peripheral:
        return 0
    if c1.has_provenance:
        return _intersection_with_carried(c1, c2)
    if c2.has_provenance:
        return _intersection_with_carried(c2, c1)
    LOGGER.warning("Neither curve has a known round preimage; searching for one")
    return _intersection_with_carried(find_carrier(c1), c2)


def component_count(c: Union[Curve, Tuple[int, Tuple[int, ...]]]) -> int:
    """Number of components of a curve, or of a multicurve given as ``(n, coords)``."""
    if isinstance(c, Curve):
        if c.peripheral or c.n < 3:
            return 1
        n, coords = c.n, c.coords
    else:
        n, coords = c
    return dynnikov.component_count(n, tuple(coords))


def disjoint_union(c1: Curve, c2: Curve) -> Tuple[int, Tuple[int, ...]]:
    """Coordinates of the multicurve made of two disjoint curves, as ``(n, coords)``."""
    if geometric_intersection(c1, c2) != 0:
        raise ValueError("The curves intersect, so their union is not a multicurve")
    return c1.n, tuple(x + y for x, y in zip(c1.coords, c2.coords))


def round_specs(n: int, include_peripheral: bool = False) -> List[RoundCurveSpec]:
    """Every round curve spec on ``n`` punctures, ordered by size and then lexicographically."""
    specs = []
    for size in range(2, n + 1 if include_peripheral else n):
        for mask in range(1 << n):
            subset = tuple(p + 1 for p in range(n) if mask >> p & 1)
            if len(subset) == size:
                specs.append(RoundCurveSpec(n, subset))
    return sorted(specs, key=lambda spec: (len(spec.subset), spec.subset))
