"""Max-plus curve coordinates on the n-punctured disk and the braid action on them.

A multicurve on the disk with punctures 1..n on a horizontal line is recorded by its
crossing numbers with the vertical line through each inner puncture (split at the
puncture into an upper and a lower ray) and with the vertical line between each pair of
consecutive punctures. The coordinates used everywhere are the half differences

    a_p = (lower_p - upper_p) / 2,  b_p = (line_p - line_(p+1)) / 2,   p = 1..n-2,

stored as the tuple ``(a_1, ..., a_(n-2), b_1, ..., b_(n-2))``. They are integers for
integral multicurves and they determine the multicurve up to isotopy (peripheral
components are invisible).

All functions here work on plain tuples of Python ints, so values never overflow.
"""
from typing import List, Sequence, Tuple

import networkx as nx

Coordinates = Tuple[int, ...]


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def split(coords: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Split a coordinate tuple into its ``a`` and ``b`` halves."""
    half = len(coords) // 2
    return list(coords[:half]), list(coords[half:])


def join(a: Sequence[int], b: Sequence[int]) -> Coordinates:
    """Inverse of :func:`split`."""
    return tuple(a) + tuple(b)


def half_betas(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Half the crossing numbers with the vertical lines between consecutive punctures.

    :return: a list whose entry ``p - 1`` is half the number of crossings with the line
        between punctures ``p`` and ``p + 1``, for ``p = 1..n-1``
    """
    best = 0
    prefix = 0
    for a_j, b_j in zip(a, b):
        best = max(best, abs(a_j) + _pos(b_j) + prefix)
        prefix += b_j
    out = [best]
    for b_j in b:
        out.append(out[-1] - b_j)
    return out


def _plus_step(a0: int, b0: int, a1: int, b1: int) -> Tuple[int, int, int, int]:
    c = a0 - a1 + _pos(b1) - _neg(b0)
    return (
        a0 + _pos(b0) + _pos(_pos(b1) - c),
        b1 - _pos(c),
        a1 + _neg(b1) + _neg(_neg(b0) + c),
        b0 + _pos(c),
    )


def _minus_step(a0: int, b0: int, a1: int, b1: int) -> Tuple[int, int, int, int]:
    d = a0 - a1 - _pos(b1) + _neg(b0)
    return (
        a0 - _pos(b0) - _pos(_pos(b1) + d),
        b1 + _neg(d),
        a1 - _neg(b1) - _neg(_neg(b0) - d),
        b0 - _neg(d),
    )


def act_letter(n: int, coords: Coordinates, letter: int) -> Coordinates:
    """Apply the generator ``sigma_|letter|`` raised to ``sign(letter)``.

    The two outermost punctures carry no coordinates of their own, so the tuple is
    padded with the pair forced by the boundary before the local rule is applied to
    the pairs ``i - 1`` and ``i``, and the padding is dropped afterwards.
    """
    a, b = split(coords)
    betas = half_betas(a, b)
    pa = [0] + a + [0]
    pb = [-betas[0]] + b + [betas[-1]]
    i = abs(letter)
    step = _plus_step if letter > 0 else _minus_step
    pa[i - 1], pb[i - 1], pa[i], pb[i] = step(pa[i - 1], pb[i - 1], pa[i], pb[i])
    return join(pa[1 : n - 1], pb[1 : n - 1])


def act_letters(n: int, letters: Sequence[int], coords: Coordinates) -> Coordinates:
    """Apply a word in functional order: the last letter acts first."""
    for letter in reversed(letters):
        coords = act_letter(n, coords, letter)
    return coords


def round_block(n: int, i: int, j: int) -> Coordinates:
    """Coordinates of the round curve enclosing the consecutive punctures ``i..j``."""
    a = [0] * (n - 2)
    b = [0] * (n - 2)
    if i >= 2:
        b[i - 2] -= 1
    if j <= n - 1:
        b[j - 2] += 1
    return join(a, b)


def left_block_intersection(n: int, coords: Coordinates, k: int) -> int:
    """Geometric intersection of a multicurve with the round curve around punctures ``1..k``."""
    if k >= n:
        return 0
    a, b = split(coords)
    betas = half_betas(a, b)
    inner = betas[0]
    for p in range(2, k + 1):
        inner = min(inner, betas[p - 2] - _pos(b[p - 2]) - abs(a[p - 2]))
    return 2 * (betas[k - 1] - inner)


def complexity(coords: Coordinates) -> int:
    """Total number of crossings with the vertical lines between punctures."""
    return 2 * sum(half_betas(*split(coords)))


def component_count(n: int, coords: Coordinates) -> int:
    """Number of components of the integral multicurve described by ``coords``.

    Inside the strip around an inner puncture a multicurve in minimal position consists of
    arcs passing above the puncture, nested loops turning around it from one side, and
    arcs passing below it. Crossing points on each vertical line are numbered from the top
    and joined strip by strip; components are the connected components of the resulting graph.

    :raise ValueError: if the coordinates do not describe an integral multicurve
    """
    a, b = split(coords)
    betas = half_betas(a, b)
    offsets = [0]
    for half in betas:
        offsets.append(offsets[-1] + 2 * half)
    graph = nx.Graph()
    graph.add_nodes_from(range(offsets[-1]))

    def point(line: int, t: int) -> int:
        return offsets[line - 1] + t

    first = 2 * betas[0]
    graph.add_edges_from((point(1, t), point(1, first - 1 - t)) for t in range(first // 2))
    last = 2 * betas[-1]
    graph.add_edges_from((point(n - 1, t), point(n - 1, last - 1 - t)) for t in range(last // 2))
    for p in range(2, n):
        left_loops = _pos(b[p - 2])
        right_loops = -_neg(b[p - 2])
        above = betas[p - 2] - left_loops - a[p - 2]
        below = betas[p - 2] - left_loops + a[p - 2]
        if above < 0 or below < 0:
            raise ValueError(f"Coordinates {coords} do not describe a multicurve")
        graph.add_edges_from((point(p - 1, t), point(p, t)) for t in range(above))
        graph.add_edges_from(
            (point(p - 1, above + t), point(p - 1, above + 2 * left_loops - 1 - t)) for t in range(left_loops)
        )
        graph.add_edges_from(
            (point(p, above + t), point(p, above + 2 * right_loops - 1 - t)) for t in range(right_loops)
        )
        graph.add_edges_from(
            (point(p - 1, above + 2 * left_loops + t), point(p, above + 2 * right_loops + t)) for t in range(below)
        )
    return nx.number_connected_components(graph)
