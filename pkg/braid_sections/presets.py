"""Every identity and obstruction scenario checked by ``run-all --paper-suite``.

Each entry is a function taking a seed and a :class:`Scale` and returning a list of verdicts.
"""
from dataclasses import dataclass
import logging
import math
import random
import time
from typing import Callable, Dict, List, Tuple

import numpy as np

from . import braid_core, cohomology, curves, geometric_sections, oracle, section_algebra, twist_calculus
from .keys import *
from .section_algebra import SectionSpec
from .verdict import Verdict

LOGGER = logging.getLogger(__name__)

CONTINUITY_STEP = 1e-9
CONTINUITY_BOUND = 1e-6


@dataclass(frozen=True)
class Scale:
    """How many random cases the sweeping scenarios check."""

    section_sizes: Tuple[int, ...]
    specs_per_kind: int
    section_samples: int
    disjointness_sizes: Tuple[int, ...]
    configurations: int
    """Random configurations per space, planar and spherical."""
    words: int


FULL = Scale(
    section_sizes=(4, 5, 6),
    specs_per_kind=10,
    section_samples=100,
    disjointness_sizes=(4, 5),
    configurations=10_000,
    words=1_000,
)
QUICK = Scale(
    section_sizes=(4,),
    specs_per_kind=2,
    section_samples=20,
    disjointness_sizes=(4,),
    configurations=200,
    words=200,
)

Scenario = Callable[[int, Scale], List[Verdict]]


def lanterns(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    verdicts = [preset.verify() for preset in twist_calculus.lantern_presets().values()]
    verdicts += [twist_calculus.LANTERN_PRESETS[LANTERN_CASE3].verify(n) for n in (5, 6)]
    verdicts.append(twist_calculus.LANTERN_PRESETS[LANTERN_SUBCASE3].verify(4))
    return verdicts


def trace_criterion(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    started = time.perf_counter()
    rows = {i: twist_calculus.classify_product_type(i) for i in range(1, 11)}
    holds = all(c.trace == 2 - i * i for i, c in rows.items()) and [
        i for i, c in rows.items() if c.kind == twist_calculus.ProductType.PARABOLIC
    ] == [2]
    witness = {str(i): {"trace": c.trace, "type": c.kind} for i, c in rows.items()}
    return [Verdict.fromcheck("trace(T_a T_b) = 2 - i(a,b)^2", holds, witness, started)]


def sections(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    rng = random.Random(seed)
    verdicts = []
    for n in scale.section_sizes:
        per_kind = scale.specs_per_kind
        specs = [SectionSpec(n, INFINITY, 0, section_algebra.random_weights(n, rng)) for _ in range(per_kind)]
        specs += [
            SectionSpec(n, NEAR_K, rng.randint(1, n), section_algebra.random_weights(n, rng)) for _ in range(per_kind)
        ]
        for spec in specs:
            started = time.perf_counter()
            report = section_algebra.verify_section(spec, scale.section_samples, seed=rng.randrange(2**31))
            claim = f"{spec.kind} section of PB_{n} (k={spec.k}, weights={list(spec.weights)})"
            verdicts.append(Verdict.fromcheck(claim, report.verified, {"failures": report.failures()}, started))
    return verdicts


def _disjointness(n: int) -> Verdict:
    started = time.perf_counter()
    specs = curves.round_specs(n)
    mismatches = []
    for t, s1 in enumerate(specs):
        for s2 in specs[t + 1 :]:
            c1, c2 = curves.round_curve(s1), curves.round_curve(s2)
            count = curves.geometric_intersection(c1, c2)
            commute = twist_calculus.twists_commute(c1, c2)
            pl = oracle.pl_intersection(s1, s2)
            if (count == 0) != commute or count != pl:
                mismatches.append({"curves": [s1.subset, s2.subset], "dynnikov": count, "pl": pl, "commute": commute})
    claim = f"i(a,b) = 0 iff T_a T_b = T_b T_a, for round curves in PB_{n}"
    return Verdict.fromcheck(claim, not mismatches, {"pairs": len(specs) * (len(specs) - 1) // 2, "mismatches": mismatches}, started)


def disjointness(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    return [_disjointness(n) for n in scale.disjointness_sizes]


def _expected_witness(case: str, g: int, n: int) -> cohomology.GradedClass:
    if case == CASE_1A:
        return cohomology.omega_class(g, n, 1)
    elif case == CASE_1B:
        return cohomology.omega_class(g, n, 2) + cohomology.cup(
            cohomology.a_class(g, n, 1, 1), cohomology.b_class(g, n, 1, 2)
        )
    return cohomology.surface_euler_number(g) * cohomology.omega_class(g, n, 1)


def closed_surfaces(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    verdicts = []
    for case in (CASE_1A, CASE_1B, CASE_2):
        for g in (2, 3):
            for n in (2, 3, 4):
                started = time.perf_counter()
                result = cohomology.obstruction_closed_surface(g, n, cohomology.preset_pullback(case, g, n))
                holds = result.no_section and result.witness == _expected_witness(case, g, n)
                witness = {"verdict": result.verdict, "index": result.index, "class": result.witness}
                verdicts.append(Verdict.fromcheck(f"{case}: no section of PConf_{n + 1}(S_{g}) -> PConf_{n}(S_{g})", holds, witness, started))
    return verdicts


def spheres(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    verdicts = []
    for n in range(3, 9):
        started = time.perf_counter()
        factors = cohomology.h2_pconf_sphere(n)
        certificates = [cohomology.euler_class_vanishes_sphere(n, k) for k in range(1, n + 1)]
        holds = factors == [2] and all(ok for ok, _ in certificates)
        witness = {"invariant_factors": factors, "certificates": [c.combination for _, c in certificates]}
        verdicts.append(Verdict.fromcheck(f"H^2(PConf_{n}(S^2)) = Z/2 and p_k^* eu = 0", holds, witness, started))
    for k in range(1, 6):
        started = time.perf_counter()
        result = cohomology.s2k_section_constraints(k)
        holds = result.no_section and result.constraints == ("kappa + 1 = 0", "kappa - 1 = 0")
        verdicts.append(
            Verdict.fromcheck(f"no section of PConf_3(S^{2 * k}) -> PConf_2(S^{2 * k})", holds, {"constraints": result.constraints}, started)
        )
    return verdicts


def _unit(v: np.ndarray) -> Tuple[float, ...]:
    return tuple(float(x) for x in v / np.linalg.norm(v))


def random_planar_config(rng: random.Random, n: int) -> geometric_sections.PlanarConfig:
    return geometric_sections.PlanarConfig(tuple((rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(n)))


def random_sphere_config(rng: random.Random, n: int) -> geometric_sections.SphereConfig:
    return geometric_sections.SphereConfig(
        tuple(_unit(np.array([rng.gauss(0, 1) for _ in range(3)])) for _ in range(n))
    )


def random_tangent(rng: random.Random, x: Tuple[float, ...]) -> Tuple[float, ...]:
    """A unit vector tangent to the sphere at ``x``."""
    p = np.array(x)
    w = np.array([rng.gauss(0, 1) for _ in range(3)])
    return _unit(w - np.dot(w, p) * p)


def _nudged(cfg: geometric_sections.Config, j: int) -> geometric_sections.Config:
    """The configuration with point ``j`` moved by about ``CONTINUITY_STEP``."""
    points = list(cfg.points)
    if isinstance(cfg, geometric_sections.SphereConfig):
        points[j - 1] = _unit(np.array(points[j - 1]) + CONTINUITY_STEP)
        return geometric_sections.SphereConfig(tuple(points))
    x, y = points[j - 1]
    points[j - 1] = (x + CONTINUITY_STEP, y - CONTINUITY_STEP)
    return geometric_sections.PlanarConfig(tuple(points))


def _distance(p, q) -> float:
    return float(np.linalg.norm(np.array(p, dtype=float) - np.array(q, dtype=float)))


def _section_failures(cfg: geometric_sections.Config, add: Callable[[geometric_sections.Config], geometric_sections.Config], j: int) -> List[str]:
    """What goes wrong, if anything, with one way of adding a point to ``cfg``."""
    out = add(cfg)
    failures = []
    if geometric_sections.forget_first(out) != cfg:
        failures.append("retraction")
    if min(_distance(out.points[0], p) for p in cfg.points) == 0.0:
        failures.append("collision")
    if _distance(out.points[0], add(_nudged(cfg, j)).points[0]) > CONTINUITY_BOUND:
        failures.append("continuity")
    return failures


def geometry(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    """Adding a point, planar and spherical, is a continuous section of forgetting it."""
    rng = random.Random(seed)
    verdicts = []
    started = time.perf_counter()
    failures = []
    for t in range(scale.configurations):
        n = rng.randint(2, 10)
        cfg = random_planar_config(rng, n)
        angle = rng.uniform(0, 2 * math.pi)
        v = (math.cos(angle), math.sin(angle))
        k, j = rng.randint(1, n), rng.randint(1, n)
        adds = {
            NEAR_K: lambda c: geometric_sections.add_near_k(c, k, v),
            INFINITY: lambda c: geometric_sections.add_at_infinity(c, v),
        }
        for kind, add in adds.items():
            failures += [{"config": t, "kind": kind, "failure": f} for f in _section_failures(cfg, add, j)]
    verdicts.append(
        Verdict.fromcheck("adding a point is a continuous section on the plane", not failures, {"failures": failures}, started)
    )
    started = time.perf_counter()
    failures = []
    for t in range(scale.configurations):
        n = rng.randint(2, 10)
        cfg = random_sphere_config(rng, n)
        k = rng.randint(1, n)
        # nudge a point other than x_k so the tangent direction stays tangent
        j = rng.choice([i for i in range(1, n + 1) if i != k])
        v = random_tangent(rng, cfg.points[k - 1])
        found = _section_failures(cfg, lambda c: geometric_sections.add_near_k(c, k, v), j)
        failures += [{"config": t, "kind": NEAR_K, "failure": f} for f in found]
    verdicts.append(
        Verdict.fromcheck("adding a point is a continuous section on the sphere", not failures, {"failures": failures}, started)
    )
    return verdicts


def _conjugate(u: braid_core.BraidWord, x: braid_core.BraidWord) -> braid_core.BraidWord:
    return braid_core.compose(braid_core.compose(u, x), braid_core.inverse(u))


def word_problem(seed: int, scale: Scale = QUICK) -> List[Verdict]:
    """Conjugates of a relator and of ``v v^-1`` are trivial; conjugates of ``A_12`` are not."""
    rng = random.Random(seed)
    started = time.perf_counter()
    failures = []
    for t in range(scale.words):
        n = rng.randint(3, 6)
        u = braid_core.random_word(n, rng.randint(1, 12), rng)
        v = braid_core.random_word(n, rng.randint(1, 12), rng)
        trivial = [
            _conjugate(u, braid_core.BraidWord(n, (1, 2, 1, -2, -1, -2))),
            _conjugate(u, braid_core.compose(v, braid_core.inverse(v))),
        ]
        nontrivial = _conjugate(u, braid_core.artin_generator(n, 1, 2))
        if not all(braid_core.is_identity(w) for w in trivial) or braid_core.is_identity(nontrivial):
            failures.append(t)
    return [Verdict.fromcheck("word problem on conjugates of relators", not failures, {"failures": failures}, started)]


SUITE: Dict[str, Scenario] = {
    "lanterns": lanterns,
    "trace": trace_criterion,
    "sections": sections,
    "disjointness": disjointness,
    "closed-surfaces": closed_surfaces,
    "spheres": spheres,
    "geometry": geometry,
    "word-problem": word_problem,
}


def run_suite(seed: int = 0, scale: Scale = FULL) -> List[Verdict]:
    """Run every scenario; a scenario that raises is reported as an ``error`` verdict."""
    verdicts = []
    for name, scenario in SUITE.items():
        LOGGER.info(f"Running {name}")
        try:
            verdicts += scenario(seed, scale)
        except ValueError as e:
            LOGGER.error(f"Scenario {name} failed: {e}")
            verdicts.append(Verdict.fromerror(name, e))
    return verdicts
