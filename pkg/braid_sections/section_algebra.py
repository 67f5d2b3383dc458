"""Candidate sections PB_n -> PB_(n+1) of the strand-forgetting map, and their verification.

Two families are modelled. Adding a strand next to strand ``k`` cables that strand; the new
strand takes index ``k`` and the old strands from ``k`` on move up by one. Adding a strand at
infinity puts the new strand at index ``n + 1``, outside everything. Either base map is then
twisted by ``t^phi(u)``, where ``phi`` is an integer combination of linking numbers and ``t``
centralizes the image of the base map.
"""
from dataclasses import dataclass, field
import logging
import random
from typing import Callable, Dict, List, Optional, Tuple

from . import braid_core, curves, utils
from .braid_core import BraidWord
from .curves import Curve
from .keys import *

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectionSpec:
    """A candidate section, given by its kind and the weights of its twisting homomorphism."""

    n: int
    kind: str
    """Either ``near_k`` or ``infinity``."""
    k: int = 0
    """The strand that is doubled, for ``near_k``."""
    weights: Tuple[Tuple[int, int, int], ...] = ()
    """``(i, j, w_ij)`` triples; pairs not listed have weight zero."""

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A section needs a positive strand count, got {self.n}")
        if self.kind == NEAR_K:
            if not 1 <= self.k <= self.n:
                raise ValueError(f"Strand {self.k} is not in 1..{self.n}")
        elif self.kind == INFINITY:
            object.__setattr__(self, "k", 0)
        else:
            raise ValueError(f"Unknown section kind: {self.kind}")
        weights = tuple((int(i), int(j), int(w)) for i, j, w in self.weights)
        seen = set()
        for i, j, _ in weights:
            if not 1 <= i < j <= self.n or (i, j) in seen:
                raise ValueError(f"Bad weight pair ({i}, {j}) for {self.n} strands")
            seen.add((i, j))
        object.__setattr__(self, "weights", weights)

    def weight(self, i: int, j: int) -> int:
        for p, q, w in self.weights:
            if (p, q) == (i, j):
                return w
        return 0


def cable_strand(u: BraidWord, k: int) -> BraidWord:
    """Double strand ``k`` of a pure braid, adding the new strand immediately to its left."""
    if not braid_core.is_pure(u):
        raise ValueError(f"The braid '{u}' is not pure")
    if not 1 <= k <= u.strands:
        raise ValueError(f"Strand {k} is not in 1..{u.strands}")
    position = k
    letters: List[int] = []
    for letter in u.letters:
        i, sign = abs(letter), (1 if letter > 0 else -1)
        if i + 1 < position:
            letters.append(letter)
        elif i > position:
            letters.append(sign * (i + 1))
        elif i == position:
            # the pair crosses strand i + 1 from the left
            letters += [sign * (i + 1), sign * i]
            position = i + 1
        else:
            letters += [sign * i, sign * (i + 1)]
            position = i
    return BraidWord(u.strands + 1, tuple(letters))


def include_new_strand(u: BraidWord) -> BraidWord:
    """The same braid with an extra strand at position ``n + 1`` that nothing crosses."""
    if not braid_core.is_pure(u):
        raise ValueError(f"The braid '{u}' is not pure")
    return BraidWord(u.strands + 1, u.letters)


def new_strand_index(spec: SectionSpec) -> int:
    return spec.k if spec.kind == NEAR_K else spec.n + 1


def weight_of(spec: SectionSpec, u: BraidWord) -> int:
    """``phi(u)``: the weighted sum of the linking numbers of ``u``."""
    lk = braid_core.linking_matrix(u)
    return sum(w * lk[i, j] for i, j, w in spec.weights)


def twisting_element(spec: SectionSpec) -> BraidWord:
    """The word ``t`` raised to ``phi(u)`` in :func:`apply_section`.

    For ``near_k`` it is the twist about the curve around the doubled pair. At infinity it is
    ``T_c T_b^-1``, with ``c`` around the old strands and ``b`` the boundary.
    """
    m = spec.n + 1
    if spec.kind == NEAR_K:
        return braid_core.full_twist(m, spec.k, spec.k + 1)
    return braid_core.compose(
        braid_core.full_twist(m, 1, spec.n), braid_core.inverse(braid_core.full_twist(m, 1, m))
    )


def base_map(spec: SectionSpec, u: BraidWord) -> BraidWord:
    if spec.kind == NEAR_K:
        return cable_strand(u, spec.k)
    return include_new_strand(u)


def apply_section(spec: SectionSpec, u: BraidWord) -> BraidWord:
    """``base(u) t^phi(u)``."""
    if u.strands != spec.n:
        raise ValueError(f"Section on {spec.n} strands applied to a braid on {u.strands}")
    base = base_map(spec, u)
    return braid_core.compose(base, braid_core.power(twisting_element(spec), weight_of(spec, u)))


def preserved_curve(spec: SectionSpec) -> Curve:
    """The curve fixed by the whole image: around the doubled pair, or around the old strands."""
    m = spec.n + 1
    if spec.kind == NEAR_K:
        return curves.round_curve_on(m, spec.k, spec.k + 1)
    return curves.round_curve_on(m, *range(1, spec.n + 1))


Section = Callable[[SectionSpec, BraidWord], BraidWord]


@dataclass
class SectionReport:
    """Results of checking the section axioms for one spec."""

    spec: SectionSpec
    retraction: Dict[Tuple[int, int], bool] = field(default_factory=dict)
    """Forgetting the new strand from the image of A_ij gives back A_ij."""
    centralizer: Dict[Tuple[int, int], bool] = field(default_factory=dict)
    """The twisting element commutes with the base image of A_ij."""
    preserved: Dict[Tuple[int, int], bool] = field(default_factory=dict)
    """The image of A_ij fixes the preserved curve."""
    homomorphism: List[bool] = field(default_factory=list)
    """One entry per random pair ``u, v``: ``s(uv) = s(u)s(v)``."""
    seed: int = 0

    @property
    def verified(self) -> bool:
        return all(
            all(results.values()) for results in [self.retraction, self.centralizer, self.preserved]
        ) and all(self.homomorphism)

    def failures(self) -> Dict[str, List]:
        return {
            "retraction": [pair for pair, ok in self.retraction.items() if not ok],
            "centralizer": [pair for pair, ok in self.centralizer.items() if not ok],
            "preserved": [pair for pair, ok in self.preserved.items() if not ok],
            "homomorphism": [t for t, ok in enumerate(self.homomorphism) if not ok],
        }

    def to_rows(self) -> List[List]:
        rows = []
        for name, results in [("retraction", self.retraction), ("centralizer", self.centralizer), ("preserved", self.preserved)]:
            rows += [[name, f"A{i}{j}", ok] for (i, j), ok in results.items()]
        rows += [["homomorphism", f"sample {t}", ok] for t, ok in enumerate(self.homomorphism)]
        return rows

    def to_pandas(self):
        """Tabulate the checks as a pandas.DataFrame, or None without pandas."""
        return utils.list_to_pandas(self.to_rows(), ["check", "subject", "holds"])


def verify_section(
    spec: SectionSpec,
    sample_count: int = 100,
    seed: int = 0,
    factors: int = 4,
    section: Optional[Section] = None,
) -> SectionReport:
    """Check retraction, centralizer, curve preservation and, on samples, the homomorphism property.

    :param sample_count: number of random pairs of pure braids for the homomorphism check
    :param seed: seed for the random pairs
    :param factors: number of pure generators multiplied together in each random braid
    :param section: replaces :func:`apply_section`, to check a deliberately broken candidate
    """
    section = section or apply_section
    rng = random.Random(seed)
    report = SectionReport(spec, seed=seed)
    n, new = spec.n, new_strand_index(spec)
    t = twisting_element(spec)
    curve = preserved_curve(spec)
    for i, j, a in braid_core.artin_generators(n):
        image = section(spec, a)
        report.retraction[(i, j)] = braid_core.is_pure(image) and braid_core.equals(
            braid_core.forget_strand(image, new), a
        )
        base = base_map(spec, a)
        report.centralizer[(i, j)] = braid_core.equals(braid_core.compose(t, base), braid_core.compose(base, t))
        report.preserved[(i, j)] = curves.is_isotopic(curves.act(image, curve), curve)
        LOGGER.debug(f"A{i}{j}: retraction {report.retraction[(i, j)]}, preserved {report.preserved[(i, j)]}")
    for _ in range(sample_count):
        u = braid_core.random_pure_word(n, factors, rng)
        v = braid_core.random_pure_word(n, factors, rng)
        report.homomorphism.append(
            braid_core.equals(section(spec, braid_core.compose(u, v)), braid_core.compose(section(spec, u), section(spec, v)))
        )
    LOGGER.info(f"Section {spec.kind} k={spec.k} on {n} strands: {'verified' if report.verified else 'failed'}")
    return report


def distinct_on_abelianization(spec1: SectionSpec, spec2: SectionSpec) -> Optional[Tuple[int, int]]:
    """A generator whose images under the two sections have different linking matrices, if any."""
    if spec1.n != spec2.n:
        raise ValueError(f"Sections on {spec1.n} and {spec2.n} strands are not comparable")
    for i, j, a in braid_core.artin_generators(spec1.n):
        if braid_core.linking_matrix(apply_section(spec1, a)) != braid_core.linking_matrix(apply_section(spec2, a)):
            return i, j
    return None


def random_weights(n: int, rng: random.Random, bound: int = 3) -> Tuple[Tuple[int, int, int], ...]:
    """A weight for every pair, uniform in ``[-bound, bound]``."""
    return tuple((i, j, rng.randint(-bound, bound)) for i in range(1, n + 1) for j in range(i + 1, n + 1))
