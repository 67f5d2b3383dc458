"""Braid words, permutations, linking matrices and the word problem for B_n.

Words are read in functional order: in ``u * v`` the word ``v`` acts first. Strands and
punctures are numbered ``1..n`` from left to right and the letter ``i`` is the positive
half twist of strands ``i`` and ``i + 1``.
"""
from dataclasses import dataclass
import logging
import random
from typing import List, Sequence, Tuple

import numpy as np

from . import dynnikov
from .regex import *

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators on a fixed number of strands.

    Two words representing the same braid need not be equal as values;
    use :func:`equals` to compare braids.
    """

    strands: int
    letters: Tuple[int, ...] = ()
    """Nonzero integers, ``v`` meaning ``sigma_|v|`` raised to ``sign(v)``."""

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"A braid needs a positive strand count, got {self.strands}")
        letters = tuple(int(letter) for letter in self.letters)
        for letter in letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(
                    f"Letter {letter} is not a generator of the braid group on {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def fromstring(cls, text: str, strands: int = 0) -> "BraidWord":
        """Construct a word from ``"n=<strands>; <letters>"`` or from bare letters.

        :param text: the serialized word
        :param strands: strand count to use when ``text`` has no header
        """
        if m := WORD_HEADER_PATTERN.fullmatch(text):
            return cls(int(m.group("strands")), _to_letters(m.group("letters")))
        elif LETTERS_PATTERN.fullmatch(text):
            if strands < 1:
                raise ValueError(f"No strand count given for the word '{text}'")
            return cls(strands, _to_letters(text))
        else:
            raise ValueError(f"'{text}' is not a braid word")

    def __str__(self) -> str:
        return f"n={self.strands}; {self.letters_string()}".rstrip()

    def letters_string(self) -> str:
        """The letters alone, separated by single spaces."""
        return " ".join(str(letter) for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def __pow__(self, exponent: int) -> "BraidWord":
        return power(self, exponent)


def _to_letters(text: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in text.split())


def identity(strands: int) -> BraidWord:
    """The empty word."""
    return BraidWord(strands)


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenate two words on the same number of strands."""
    _check_same_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-letter for letter in reversed(u.letters)))


def power(u: BraidWord, exponent: int) -> BraidWord:
    """``u`` composed with itself ``exponent`` times; negative exponents use the inverse."""
    base = u if exponent >= 0 else inverse(u)
    return BraidWord(u.strands, base.letters * abs(exponent))


def _check_same_strands(u: BraidWord, v: BraidWord):
    if u.strands != v.strands:
        raise ValueError(
            f"Strand counts differ: {u.strands} and {v.strands}"
        )


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..size}``; ``image[p - 1]`` is where ``p`` goes."""

    size: int
    image: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(1, self.size + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{self.size}")

    def __call__(self, p: int) -> int:
        return self.image[p - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        if self.size != other.size:
            raise ValueError(f"Permutation sizes differ: {self.size} and {other.size}")
        return Permutation(self.size, tuple(self(other(p)) for p in range(1, self.size + 1)))

    def is_identity(self) -> bool:
        return all(q == p for p, q in enumerate(self.image, start=1))


def permutation_of(u: BraidWord) -> Permutation:
    """The permutation induced on strand positions, ignoring crossing signs."""
    image = []
    for p in range(1, u.strands + 1):
        q = p
        for letter in reversed(u.letters):
            i = abs(letter)
            if q == i:
                q = i + 1
            elif q == i + 1:
                q = i
        image.append(q)
    return Permutation(u.strands, tuple(image))


def is_pure(u: BraidWord) -> bool:
    return permutation_of(u).is_identity()


def _check_pure(u: BraidWord):
    if not is_pure(u):
        raise ValueError(f"The braid '{u}' is not pure")


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix of pairwise linking numbers, zero on the diagonal."""

    size: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.size or any(len(row) != self.size for row in entries):
            raise ValueError(f"A linking matrix of size {self.size} must be square")
        for i in range(self.size):
            if entries[i][i] != 0:
                raise ValueError("A linking matrix has a zero diagonal")
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("A linking matrix is symmetric")

    @classmethod
    def zero(cls, size: int) -> "LinkingMatrix":
        return cls(size, tuple((0,) * size for _ in range(size)))

    @classmethod
    def fromarray(cls, array: np.ndarray) -> "LinkingMatrix":
        return cls(array.shape[0], tuple(tuple(int(x) for x in row) for row in array))

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        """Entry for the 1-based strand pair ``(i, j)``."""
        i, j = pair
        return self.entries[i - 1][j - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def __add__(self, other: "LinkingMatrix") -> "LinkingMatrix":
        return LinkingMatrix.fromarray(self.as_array() + other.as_array())

    def __neg__(self) -> "LinkingMatrix":
        return LinkingMatrix.fromarray(-self.as_array())

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)


def linking_matrix(u: BraidWord) -> LinkingMatrix:
    """Half the signed crossings between each pair of strands of a pure braid."""
    _check_pure(u)
    n = u.strands
    crossings = np.zeros((n, n), dtype=object)
    strand_at = list(range(n))
    for letter in u.letters:
        i = abs(letter) - 1
        x, y = strand_at[i], strand_at[i + 1]
        sign = 1 if letter > 0 else -1
        crossings[x, y] += sign
        crossings[y, x] += sign
        strand_at[i], strand_at[i + 1] = y, x
    return LinkingMatrix.fromarray(crossings // 2)


def exponent_sum(u: BraidWord) -> int:
    """The image of ``u`` in the abelianization of B_n."""
    return sum(1 if letter > 0 else -1 for letter in u.letters)


def artin_generator(n: int, i: int, j: int) -> BraidWord:
    """The pure generator A_ij, strand ``j`` going once around strand ``i`` below the others.

    Spelled ``sigma_(j-1)^-1 ... sigma_(i+1)^-1 sigma_i^2 sigma_(i+1) ... sigma_(j-1)``.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"Need 1 <= i < j <= n for A_ij, got i={i}, j={j}, n={n}")
    conjugator = tuple(range(i + 1, j))
    letters = tuple(-p for p in reversed(conjugator)) + (i, i) + conjugator
    return BraidWord(n, letters)


def artin_generators(n: int) -> List[Tuple[int, int, BraidWord]]:
    """Every ``(i, j, A_ij)`` with ``1 <= i < j <= n``, in lexicographic order."""
    return [(i, j, artin_generator(n, i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def full_twist(n: int, i: int, j: int) -> BraidWord:
    """The full twist of the consecutive strands ``i..j``, central in their braid group."""
    if not 1 <= i <= j <= n:
        raise ValueError(f"Need 1 <= i <= j <= n for a full twist, got i={i}, j={j}, n={n}")
    return BraidWord(n, tuple(range(i, j)) * (j - i + 1))


def forget_strand(u: BraidWord, t: int) -> BraidWord:
    """Delete strand ``t`` from a pure braid, giving a pure braid on one strand fewer."""
    _check_pure(u)
    if not 1 <= t <= u.strands or u.strands < 2:
        raise ValueError(f"Cannot forget strand {t} of a braid on {u.strands} strands")
    position = t
    letters = []
    for letter in u.letters:
        i = abs(letter)
        if position == i:
            position = i + 1
        elif position == i + 1:
            position = i
        elif i > position:
            letters.append(letter - 1 if letter > 0 else letter + 1)
        else:
            letters.append(letter)
    return BraidWord(u.strands - 1, tuple(letters))


def _test_curves(n: int) -> List[dynnikov.Coordinates]:
    return [dynnikov.round_block(n, i, i + 1) for i in range(1, n)]


def is_identity(u: BraidWord) -> bool:
    """Decide whether ``u`` is the trivial braid.

    Permutation and linking numbers are checked first. A braid passing both acts on the
    curves around consecutive puncture pairs; only central braids fix all of them, and the
    only central pure braid with zero linking numbers is trivial.
    """
    if not is_pure(u):
        return False
    if not linking_matrix(u).is_zero():
        return False
    n = u.strands
    if n < 3:
        return True
    return all(dynnikov.act_letters(n, u.letters, c) == c for c in _test_curves(n))


def equals(u: BraidWord, v: BraidWord) -> bool:
    _check_same_strands(u, v)
    return is_identity(compose(u, inverse(v)))


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    """A uniformly random word of the given length on ``n >= 2`` strands."""
    letters: List[int] = []
    if n < 2:
        return BraidWord(n)
    for _ in range(length):
        i = rng.randint(1, n - 1)
        letters.append(i if rng.random() < 0.5 else -i)  # pragma: no mutate
    return BraidWord(n, tuple(letters))


def random_pure_word(n: int, factors: int, rng: random.Random) -> BraidWord:
    """A product of ``factors`` random pure generators and their inverses."""
    word = identity(n)
    generators = artin_generators(n)
    if not generators:
        return word
    for _ in range(factors):
        _, _, a = rng.choice(generators)
        word = compose(word, a if rng.random() < 0.5 else inverse(a))  # pragma: no mutate
    return word


def free_reduce(u: BraidWord) -> BraidWord:
    """Cancel adjacent inverse letters until none remain."""
    out: List[int] = []
    for letter in u.letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(u.strands, tuple(out))
