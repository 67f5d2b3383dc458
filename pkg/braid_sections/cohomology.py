"""Exact cohomology of products of closed surfaces and spheres, and the obstructions to sections.

A class in ``H^*(S_g^n; Q)`` is a rational combination of monomials. A monomial picks one
symbol per factor: ``"1"``, ``"a<k>"``, ``"b<k>"`` (degree one) or ``"w"`` (the pullback of
the fundamental class of that factor). On a single surface the symplectic basis is oriented
so that ``b_k a_k = w``; with this orientation the diagonal class is
``w_i + w_j + sum_k (a_k^(i) b_k^(j) - b_k^(i) a_k^(j))`` and restricts to ``(2 - 2g) w`` on
the diagonal. Spheres use genus ``0`` and have only ``"1"`` and ``"w"``.

Coefficients are sympy numbers, or sympy expressions when unknowns are being solved for.
Nothing here uses floating point.
"""
from dataclasses import dataclass, field
import itertools
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import Matrix, Rational, Symbol, linsolve
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .keys import *
from .regex import SYMBOL_PATTERN

LOGGER = logging.getLogger(__name__)

Monomial = Tuple[str, ...]


def _symbol_degree(symbol: str, top: int) -> int:
    if symbol == ONE:
        return 0
    elif symbol == TOP:
        return top
    return 1


def _factor_product(x: str, y: str, top: int) -> Tuple[int, str]:
    """Product of two symbols on one factor, as ``(sign, symbol)``; sign 0 means zero."""
    if x == ONE:
        return 1, y
    if y == ONE:
        return 1, x
    if TOP in (x, y):
        return 0, ONE
    mx, my = SYMBOL_PATTERN.fullmatch(x), SYMBOL_PATTERN.fullmatch(y)
    if mx is None or my is None:
        raise ValueError(f"Unknown cohomology symbols {x}, {y}")
    if mx.group("index") != my.group("index") or mx.group("kind") == my.group("kind"):
        return 0, ONE
    return (1 if mx.group("kind") == B_PREFIX else -1), TOP


@dataclass(frozen=True)
class GradedClass:
    """A homogeneous element of ``H^*(S_g^n; Q)``, or of ``H^*((S^top)^n; Q)`` when ``genus == 0``."""

    genus: int
    factors: int
    terms: Tuple[Tuple[Monomial, Any], ...] = ()
    """Sorted ``(monomial, coefficient)`` pairs with nonzero coefficients."""
    top: int = 2
    """Degree of ``"w"``: 2 for surfaces, the dimension for spheres."""

    def __post_init__(self):
        if self.genus < 0 or self.factors < 1:
            raise ValueError(f"Bad ring: genus {self.genus}, {self.factors} factors")
        combined: Dict[Monomial, Any] = {}
        for monomial, coefficient in self.terms:
            monomial = tuple(monomial)
            if len(monomial) != self.factors:
                raise ValueError(f"Monomial {monomial} does not have {self.factors} factors")
            for symbol in monomial:
                self._check_symbol(symbol)
            combined[monomial] = combined.get(monomial, 0) + sympy.sympify(coefficient)
        terms = tuple(
            sorted((m, c) for m, c in ((m, sympy.expand(c)) for m, c in combined.items()) if c != 0)
        )
        degrees = {self._degree_of(m) for m, _ in terms}
        if len(degrees) > 1:
            raise ValueError(f"Class is not homogeneous: degrees {sorted(degrees)}")
        object.__setattr__(self, "terms", terms)

    def _check_symbol(self, symbol: str):
        if symbol in (ONE, TOP):
            return
        if (m := SYMBOL_PATTERN.fullmatch(symbol)) and self.genus > 0 and int(m.group("index")) <= self.genus:
            return
        raise ValueError(f"'{symbol}' is not a class of a genus {self.genus} surface")

    def _degree_of(self, monomial: Monomial) -> int:
        return sum(_symbol_degree(s, self.top) for s in monomial)

    @property
    def degree(self) -> Optional[int]:
        """Degree of the class; ``None`` for the zero class."""
        return self._degree_of(self.terms[0][0]) if self.terms else None

    @property
    def coefficients(self) -> Dict[Monomial, Any]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _same_ring(self, other: "GradedClass"):
        if (self.genus, self.factors, self.top) != (other.genus, other.factors, other.top):
            raise ValueError("Classes live in different cohomology rings")

    def _with_terms(self, terms) -> "GradedClass":
        return GradedClass(self.genus, self.factors, tuple(terms), self.top)

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._same_ring(other)
        return self._with_terms(self.terms + other.terms)

    def __neg__(self) -> "GradedClass":
        return self._with_terms((m, -c) for m, c in self.terms)

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def __rmul__(self, scalar) -> "GradedClass":
        return self._with_terms((m, sympy.sympify(scalar) * c) for m, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for monomial, coefficient in self.terms:
            name = "*".join(f"{s}^({i})" for i, s in enumerate(monomial, start=1) if s != ONE) or "1"
            parts.append(f"({coefficient})*{name}")
        return " + ".join(parts)


def cup(x: GradedClass, y: GradedClass) -> GradedClass:
    """The cup product, with the sign from moving odd classes past each other."""
    x._same_ring(y)
    terms = []
    for mx, cx in x.terms:
        for my, cy in y.terms:
            sign = 1
            for i in range(x.factors):
                for j in range(i):
                    if _symbol_degree(mx[i], x.top) % 2 and _symbol_degree(my[j], x.top) % 2:
                        sign = -sign
            product = []
            for a, b in zip(mx, my):
                s, symbol = _factor_product(a, b, x.top)
                sign *= s
                product.append(symbol)
            if sign:
                terms.append((tuple(product), sign * cx * cy))
    return x._with_terms(terms)


def _generator(g: int, n: int, symbol: str, i: int, top: int = 2) -> GradedClass:
    if not 1 <= i <= n:
        raise ValueError(f"Factor {i} is not in 1..{n}")
    monomial = tuple(symbol if f == i else ONE for f in range(1, n + 1))
    return GradedClass(g, n, ((monomial, 1),), top)


def unit(g: int, n: int, top: int = 2) -> GradedClass:
    return GradedClass(g, n, (((ONE,) * n, 1),), top)


def a_class(g: int, n: int, k: int, i: int) -> GradedClass:
    """``p_i^* a_k``."""
    return _generator(g, n, f"{A_PREFIX}{k}", i)


def b_class(g: int, n: int, k: int, i: int) -> GradedClass:
    """``p_i^* b_k``."""
    return _generator(g, n, f"{B_PREFIX}{k}", i)


def omega_class(g: int, n: int, i: int, top: int = 2) -> GradedClass:
    """``p_i^* [S_g]``, or ``c_i`` on a product of spheres."""
    return _generator(g, n, TOP, i, top)


def zero(g: int, n: int, top: int = 2) -> GradedClass:
    return GradedClass(g, n, (), top)


def basis_classes(g: int, n: int) -> List[GradedClass]:
    """The degree one basis: for each factor, ``a_1..a_g`` then ``b_1..b_g``."""
    out = []
    for i in range(1, n + 1):
        out += [a_class(g, n, k, i) for k in range(1, g + 1)]
        out += [b_class(g, n, k, i) for k in range(1, g + 1)]
    return out


def degree2_basis(g: int, n: int) -> List[Monomial]:
    """Monomials spanning degree two: each ``w^(i)``, then products across two factors."""
    symbols = [f"{A_PREFIX}{k}" for k in range(1, g + 1)] + [f"{B_PREFIX}{k}" for k in range(1, g + 1)]
    out = [tuple(TOP if f == i else ONE for f in range(1, n + 1)) for i in range(1, n + 1)]
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for s, t in itertools.product(symbols, symbols):
            out.append(tuple(s if f == i else t if f == j else ONE for f in range(1, n + 1)))
    return out


def degree2_coordinates(x: GradedClass) -> Matrix:
    """Column of coefficients of a degree two class in :func:`degree2_basis` order."""
    if x.degree not in (None, 2):
        raise ValueError(f"Expected a degree 2 class, got degree {x.degree}")
    coefficients = x.coefficients
    return Matrix([coefficients.get(m, 0) for m in degree2_basis(x.genus, x.factors)])


def diagonal_class(g: int, n: int, i: int, j: int, top: int = 2) -> GradedClass:
    """The Poincaré dual of the diagonal where coordinates ``i`` and ``j`` agree.

    For ``g = 0`` this is ``c_i + c_j`` on a product of spheres of dimension ``top``.
    """
    if i == j:
        raise ValueError(f"The diagonal class needs two different factors, got {i} twice")
    result = omega_class(g, n, i, top) + omega_class(g, n, j, top)
    for k in range(1, g + 1):
        result = result + cup(a_class(g, n, k, i), b_class(g, n, k, j))
        result = result - cup(b_class(g, n, k, i), a_class(g, n, k, j))
    return result


def diagonal_span_matrix(g: int, n: int) -> Matrix:
    """Columns are the coordinates of ``[Delta_st]`` for ``s < t`` in lexicographic order."""
    columns = [degree2_coordinates(diagonal_class(g, n, s, t)) for s, t in itertools.combinations(range(1, n + 1), 2)]
    if not columns:
        return Matrix.zeros(len(degree2_basis(g, n)), 0)
    return Matrix.hstack(*columns)


def in_diagonal_span(x: GradedClass) -> Tuple[bool, Dict[Tuple[int, int], Any]]:
    """Decide whether a degree two class is a rational combination of diagonal classes.

    :return: the answer and, when it is yes, the combination
    """
    pairs = list(itertools.combinations(range(1, x.factors + 1), 2))
    target = degree2_coordinates(x)
    if not pairs:
        return x.is_zero(), {}
    span = diagonal_span_matrix(x.genus, x.factors)
    if span.rank() != span.row_join(target).rank():
        return False, {}
    solution, _ = span.gauss_jordan_solve(target)
    return True, {pair: solution[t] for t, pair in enumerate(pairs) if solution[t] != 0}


@dataclass(frozen=True)
class Pullback:
    """A candidate ``f^*`` from ``H^*(S_g)`` to ``H^*(S_g^n)``.

    ``matrix`` has a row for each of ``f^*a_1..f^*a_g, f^*b_1..f^*b_g`` giving its
    coordinates in :func:`basis_classes` order. ``omega`` gives ``f^*[S_g]`` directly as
    coefficients of ``w^(1)..w^(n)``; a single number is the coefficient of ``w^(1)``. Without
    it ``f^*[S_g] = f^*b_1 f^*a_1``.
    """

    g: int
    n: int
    matrix: Tuple[Tuple[Any, ...], ...]
    omega: Optional[Tuple[Any, ...]] = None

    def __post_init__(self):
        matrix = tuple(tuple(sympy.nsimplify(x) for x in row) for row in self.matrix)
        if len(matrix) != 2 * self.g or any(len(row) != 2 * self.g * self.n for row in matrix):
            raise ValueError(
                f"A pullback for genus {self.g} and {self.n} points needs a {2 * self.g}x{2 * self.g * self.n} matrix"
            )
        object.__setattr__(self, "matrix", matrix)
        if self.omega is not None:
            omega = self.omega if isinstance(self.omega, (tuple, list)) else (self.omega,)
            omega = tuple(sympy.nsimplify(x) for x in omega)
            if len(omega) == 1:
                omega = omega + (0,) * (self.n - 1)
            if len(omega) != self.n:
                raise ValueError(f"omega needs 1 or {self.n} coefficients, got {len(omega)}")
            object.__setattr__(self, "omega", omega)

    @classmethod
    def zero(cls, g: int, n: int) -> "Pullback":
        return cls(g, n, tuple((0,) * (2 * g * n) for _ in range(2 * g)))

    @classmethod
    def projection(cls, g: int, n: int, i: int) -> "Pullback":
        """``p_i^*``."""
        rows = []
        for r in range(2 * g):
            row = [0] * (2 * g * n)
            row[2 * g * (i - 1) + r] = 1
            rows.append(tuple(row))
        return cls(g, n, tuple(rows))

    def _row_class(self, r: int) -> GradedClass:
        result = zero(self.g, self.n)
        for coefficient, basis in zip(self.matrix[r], basis_classes(self.g, self.n)):
            if coefficient != 0:
                result = result + coefficient * basis
        return result

    def of_a(self, k: int) -> GradedClass:
        return self._row_class(k - 1)

    def of_b(self, k: int) -> GradedClass:
        return self._row_class(self.g + k - 1)

    def fundamental_class(self) -> GradedClass:
        if self.omega is None:
            return cup(self.of_b(1), self.of_a(1))
        result = zero(self.g, self.n)
        for i, coefficient in enumerate(self.omega, start=1):
            result = result + coefficient * omega_class(self.g, self.n, i)
        return result


def pullback_of_diagonal(f: Pullback, i: int) -> GradedClass:
    """``g_i^*[Delta]`` for ``g_i = (f, p_i)``."""
    g, n = f.g, f.n
    result = f.fundamental_class() + omega_class(g, n, i)
    for k in range(1, g + 1):
        result = result + cup(f.of_a(k), b_class(g, n, k, i)) - cup(f.of_b(k), a_class(g, n, k, i))
    return result


@dataclass(frozen=True)
class ObstructionVerdict:
    """``NoSection`` with a witness class or unsatisfiable constraints, or ``Inconclusive``."""

    verdict: str
    witness: Optional[GradedClass] = None
    index: Optional[int] = None
    """The point index ``i`` whose ``g_i^*[Delta]`` is the witness."""
    constraints: Tuple[str, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.verdict not in (NO_SECTION, INCONCLUSIVE):
            raise ValueError(f"Unknown obstruction verdict: {self.verdict}")
        if self.verdict == NO_SECTION and self.constraints == () and (self.witness is None or self.witness.is_zero()):
            raise ValueError("A NoSection verdict needs a nonzero witness or unsatisfiable constraints")

    @property
    def no_section(self) -> bool:
        return self.verdict == NO_SECTION


def _check_closed_surface(g: int, n: int):
    if g < 2 or n < 2:
        raise ValueError(f"Need genus > 1 and at least 2 points, got g={g}, n={n}")


def obstruction_closed_surface(g: int, n: int, f: Pullback, indices: Optional[Sequence[int]] = None) -> ObstructionVerdict:
    """Look for an ``i`` with ``g_i^*[Delta]`` outside the span of the diagonal classes.

    A section would make every ``g_i`` miss the diagonal, forcing each of these classes to
    die in ``H^2(PConf_n(S_g))``, that is to lie in the span.
    """
    _check_closed_surface(g, n)
    if (f.g, f.n) != (g, n):
        raise ValueError(f"Pullback is for g={f.g}, n={f.n}, not g={g}, n={n}")
    results: Dict[str, Any] = {}
    for i in indices or range(1, n + 1):
        pulled = pullback_of_diagonal(f, i)
        inside, combination = in_diagonal_span(pulled)
        results[str(i)] = {"class": str(pulled), "in_span": inside, "combination": {f"{s},{t}": str(c) for (s, t), c in combination.items()}}
        LOGGER.debug(f"g_{i}^*[Delta] = {pulled}: {'in' if inside else 'not in'} the diagonal span")
        if not inside:
            LOGGER.info(f"No section for g={g}, n={n}: g_{i}^*[Delta] is not in the diagonal span")
            return ObstructionVerdict(NO_SECTION, pulled, i, details=results)
    return ObstructionVerdict(INCONCLUSIVE, details=results)


def solve_case2(g: int, n: int) -> Dict[str, Any]:
    """Solve for ``f^*`` factoring through ``p_1^*`` with ``g_2^*[Delta]`` in the diagonal span.

    The unknowns are the matrix ``F`` with ``f^*e_r = sum_c F[r, c] p_1^*e_c``, the
    coefficient ``mu`` with ``f^*[S_g] = mu w^(1)`` and the span coefficients; ``lambda`` is
    the coefficient of ``[Delta_12]``.

    :return: ``{"F": Matrix, "mu": ..., "lambda": ..., "f": Pullback}``
    :raise ValueError: if the solution is not unique
    """
    _check_closed_surface(g, n)
    size = 2 * g
    F = Matrix(size, size, lambda r, c: Symbol(f"F_{r}_{c}"))
    mu = Symbol("mu")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    span = [Symbol(f"c_{s}_{t}") for s, t in pairs]
    rows = []
    for r in range(size):
        row = [0] * (size * n)
        for c in range(size):
            row[c] = F[r, c]
        rows.append(tuple(row))
    images = [zero(g, n) for _ in range(size)]
    for r in range(size):
        for c in range(size):
            images[r] = images[r] + F[r, c] * basis_classes(g, n)[c]
    target = mu * omega_class(g, n, 1) + omega_class(g, n, 2)
    for k in range(1, g + 1):
        target = target + cup(images[k - 1], b_class(g, n, k, 2)) - cup(images[g + k - 1], a_class(g, n, k, 2))
    for coefficient, (s, t) in zip(span, pairs):
        target = target - coefficient * diagonal_class(g, n, s, t)
    unknowns = list(F) + [mu] + span
    solutions = linsolve(list(degree2_coordinates(target)), unknowns)
    if len(solutions) != 1:
        raise ValueError(f"Expected a unique solution, got {solutions}")
    (values,) = solutions
    if any(v.free_symbols for v in values):
        raise ValueError(f"The solution {values} is not unique")
    assignment = dict(zip(unknowns, values))
    forced_F = F.subs(assignment)
    forced_mu = assignment[mu]
    matrix = tuple(tuple(forced_F[r, c] if c < size else 0 for c in range(size * n)) for r in range(size))
    LOGGER.info(f"Case 2 for g={g}, n={n}: lambda={assignment[span[0]]}, mu={forced_mu}")
    return {
        "F": forced_F,
        "mu": forced_mu,
        "lambda": assignment[span[0]],
        "f": Pullback(g, n, matrix, (forced_mu,)),
    }


def preset_pullback(name: str, g: int, n: int) -> Pullback:
    """The candidate ``f^*`` of each case of the closed surface argument.

    ``case1a``: ``f^* = 0``. ``case1b``: ``f^*a_1 = p_1^*a_1`` and every other basis class
    goes to zero. ``case2``: the pullback forced by :func:`solve_case2`.
    """
    _check_closed_surface(g, n)
    if name == CASE_1A:
        return Pullback.zero(g, n)
    elif name == CASE_1B:
        rows = [[0] * (2 * g * n) for _ in range(2 * g)]
        rows[0][0] = 1
        return Pullback(g, n, tuple(tuple(row) for row in rows))
    elif name == CASE_2:
        return solve_case2(g, n)["f"]
    else:
        raise ValueError(f"Unknown obstruction preset: {name}")


def surface_euler_number(g: int) -> int:
    """Euler number of the unit tangent bundle of S_g."""
    return 2 - 2 * g


def sphere_relation_matrix(n: int) -> Matrix:
    """Rows ``p_i + p_j`` for ``i < j``, on generators ``p_1..p_n``."""
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        row = [0] * n
        row[i] = row[j] = 1
        rows.append(row)
    return Matrix(rows) if rows else Matrix.zeros(0, n)


def invariant_factors(relations: Matrix) -> List[int]:
    """Invariant factors of the cokernel of an integer relation matrix.

    Trivial factors are dropped and each free summand is reported as ``0``.
    """
    if relations.rows == 0:
        return [0] * relations.cols
    snf = smith_normal_form(relations, domain=ZZ)
    diagonal = [abs(int(snf[t, t])) for t in range(min(snf.shape))]
    rank = sum(1 for d in diagonal if d != 0)
    return [d for d in diagonal if d not in (0, 1)] + [0] * (relations.cols - rank)


def h2_pconf_sphere(n: int) -> List[int]:
    """Invariant factors of ``H^2(PConf_n(S^2); Z)``: ``[0]`` for ``n = 2``, ``[2]`` from ``n = 3`` on."""
    if n < 2:
        raise ValueError(f"Need at least 2 points, got {n}")
    return invariant_factors(sphere_relation_matrix(n))


@dataclass(frozen=True)
class EulerCertificate:
    """``2 p_k`` written as an integer combination of the relations ``p_i + p_j``."""

    n: int
    k: int
    combination: Tuple[Tuple[Tuple[int, int], int], ...]

    def vector(self) -> Matrix:
        pairs = list(itertools.combinations(range(1, self.n + 1), 2))
        weights = dict(self.combination)
        row = Matrix([[weights.get(pair, 0) for pair in pairs]])
        return row * sphere_relation_matrix(self.n)

    def holds(self) -> bool:
        expected = Matrix([[2 if p == self.k else 0 for p in range(1, self.n + 1)]])
        return self.vector() == expected


def euler_class_vanishes_sphere(n: int, k: int) -> Tuple[bool, EulerCertificate]:
    """Whether ``p_k^* eu = 2 p_k^*[S^2]`` vanishes in ``H^2(PConf_n(S^2); Z)``, with a certificate.

    ``2 e_k = (e_k + e_i) + (e_k + e_j) - (e_i + e_j)`` for two other indices ``i < j``.
    """
    if n < 3 or not 1 <= k <= n:
        raise ValueError(f"Need n > 2 and 1 <= k <= n, got n={n}, k={k}")
    i, j = [p for p in range(1, n + 1) if p != k][:2]
    combination = ((tuple(sorted((k, i))), 1), (tuple(sorted((k, j))), 1), ((i, j), -1))
    certificate = EulerCertificate(n, k, combination)  # type: ignore
    return certificate.holds(), certificate


def s2k_section_constraints(k: int, diagonal_relation: bool = True) -> ObstructionVerdict:
    """Constraints on ``f^*(c) = kappa c_1`` for a section over ``PConf_2(S^(2k))``.

    In the complement of the diagonal ``c_1 + c_2 = 0``, so both ``g_1^*[Delta] = (kappa + 1) c_1``
    and ``g_2^*[Delta] = (kappa - 1) c_1`` must vanish.

    :param diagonal_relation: drop the relation ``c_1 + c_2 = 0`` when false
    """
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")
    kappa = Symbol("kappa")
    top = 2 * k
    c1, c2 = omega_class(0, 2, 1, top), omega_class(0, 2, 2, top)
    pulled = [kappa * c1 + c for c in (c1, c2)]
    if diagonal_relation:
        # reduce modulo c_2 = -c_1
        equations = [
            sympy.expand(x.coefficients.get(c1.terms[0][0], 0) - x.coefficients.get(c2.terms[0][0], 0))
            for x in pulled
        ]
    else:
        equations = []
    constraints = tuple(f"{e} = 0" for e in equations)
    solutions = linsolve(equations, [kappa]) if equations else sympy.FiniteSet((kappa,))
    details = {"k": k, "classes": [str(x) for x in pulled], "solutions": str(solutions)}
    if solutions == sympy.EmptySet:
        LOGGER.info(f"No section over PConf_2(S^{top}): {constraints} cannot hold together")
        return ObstructionVerdict(NO_SECTION, constraints=constraints, details=details)
    return ObstructionVerdict(INCONCLUSIVE, constraints=constraints, details=details)


def h1_pconf_dimension(g: int, n: int) -> int:
    """Dimension of ``H^1(PConf_n(S_g); Q)``, equal to that of ``H^1(S_g^n; Q)``."""
    if g < 2 or n < 1:
        raise ValueError(f"Need g > 1 and n > 0, got g={g}, n={n}")
    return 2 * g * n
