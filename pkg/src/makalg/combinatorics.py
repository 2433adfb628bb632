"""
Permutations of Sym(n) and color vectors in [1, r]^n.

Permutations are tuples in one-line notation on ``1..n``; composition is
``(v o w)(i) = v(w(i))``.  A word ``(i_1, ..., i_l)`` of simple-reflection
indices stands for ``s_{i_1} o ... o s_{i_l}``.

>>> compose((2, 3, 1), (2, 3, 1))
(3, 1, 2)
>>> reduced_word((3, 2, 1))
(1, 2, 1)
>>> place_act((2, 1, 3), (1, 2, 1))
(2, 1, 1)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .errors import IndexOutOfRangeError, SizeMismatchError

Permutation = tuple[int, ...]
ColorVector = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation in one-line notation: {list(w)}")
    return w


def length(w: Permutation) -> int:
    """Number of inversions of ``w``."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def compose(v: Permutation, w: Permutation) -> Permutation:
    if len(v) != len(w):
        raise SizeMismatchError(f"cannot compose permutations of sizes {len(v)} and {len(w)}")
    return tuple(v[x - 1] for x in w)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return tuple(inv)


def simple_reflection(n: int, i: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"s_{i} does not exist in Sym({n})")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_multiply_simple(w: Permutation, i: int) -> Permutation:
    """``w o s_i``: swap positions i and i+1 of the one-line notation."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_multiply_simple(i: int, w: Permutation) -> Permutation:
    """``s_i o w``: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def word_to_permutation(n: int, word: Sequence[int]) -> Permutation:
    w = identity(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise IndexOutOfRangeError(f"s_{i} does not exist in Sym({n})")
        w = right_multiply_simple(w, i)
    return w


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Canonical reduced word: peel off the smallest right descent repeatedly."""
    word: list[int] = []
    w = tuple(w)
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                word.append(i)
                w = right_multiply_simple(w, i)
                break
        else:
            break
    return tuple(reversed(word))


def all_reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, found by recursing on right descents."""
    w = tuple(w)
    if length(w) == 0:
        return [()]
    words = []
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            for prefix in all_reduced_words(right_multiply_simple(w, i)):
                words.append(prefix + (i,))
    return sorted(words)


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Subword criterion against the canonical reduced word of ``w``."""
    if len(v) != len(w):
        raise SizeMismatchError(f"cannot compare permutations of sizes {len(v)} and {len(w)}")
    lv, lw = length(v), length(w)
    if lv > lw:
        return False
    if lv == lw:
        return tuple(v) == tuple(w)
    word = reduced_word(w)
    n = len(w)
    for positions in combinations(range(lw), lv):
        if word_to_permutation(n, [word[p] for p in positions]) == tuple(v):
            return True
    return False


def all_permutations(n: int) -> list[Permutation]:
    """All of Sym(n), sorted by length and then lexicographically."""
    return sorted(permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def color_vectors(n: int, r: int) -> list[ColorVector]:
    """[1, r]^n in lexicographic order."""
    return list(product(range(1, r + 1), repeat=n))


def place_act(w: Permutation, k: ColorVector) -> ColorVector:
    """``w.(k_1..k_n) = (k_{w^{-1}(1)}, ..., k_{w^{-1}(n)})``."""
    if len(w) != len(k):
        raise SizeMismatchError(f"permutation of size {len(w)} cannot act on {len(k)} colors")
    out = [0] * len(k)
    for i, x in enumerate(w):
        out[x - 1] = k[i]
    return tuple(out)


def color_act(sigma: Permutation, k: ColorVector) -> ColorVector:
    """Relabel every entry of ``k`` by the permutation ``sigma`` of [1, r]."""
    r = len(sigma)
    if any(not 1 <= c <= r for c in k):
        raise SizeMismatchError(f"a permutation of [1, {r}] cannot relabel colors {list(k)}")
    return tuple(sigma[c - 1] for c in k)


def canonical_representative(k: ColorVector) -> ColorVector:
    """Relabel colors in order of first use, e.g. (2, 1, 2) -> (1, 2, 1)."""
    relabel: dict[int, int] = {}
    for c in k:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
    return tuple(relabel[c] for c in k)


def orbit(k: ColorVector, r: int) -> frozenset[ColorVector]:
    """The Sym(r)-orbit of ``k``."""
    return frozenset(color_act(sigma, k) for sigma in permutations(range(1, r + 1)))


def _restricted_growth(n: int, r: int) -> Iterator[ColorVector]:
    def grow(prefix: list[int], top: int) -> Iterator[ColorVector]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(1, min(top + 1, r) + 1):
            prefix.append(c)
            yield from grow(prefix, max(top, c))
            prefix.pop()

    return grow([], 0)


def enumerate_orbit_representatives(n: int, r: int) -> list[tuple[ColorVector, frozenset[ColorVector]]]:
    """One first-use representative per Sym(r)-orbit on [1, r]^n, with its orbit.

    >>> [rep for rep, _ in enumerate_orbit_representatives(3, 2)]
    [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]
    """
    return [(rep, orbit(rep, r)) for rep in _restricted_growth(n, r)]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def orbit_count(n: int, r: int) -> int:
    return sum(stirling2(n, k) for k in range(1, min(n, r) + 1))
