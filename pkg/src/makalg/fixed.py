"""The subalgebra fixed by the Sym(r) color relabeling."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from . import combinatorics as comb
from .algebra import AlgebraLike, Element, _alg
from .errors import IdentityFailure, IndexOutOfRangeError, SizeGuardError
from .linalg import SpanBasis

MAX_FIXED_DIMENSION = 5000


def conjugated_idempotent(P: AlgebraLike, i: int, j: int) -> Element:
    """g_{j-1} ... g_{i+1} e_i g_{i+1}^{-1} ... g_{j-1}^{-1}, checked against e_{i,j}."""
    A = _alg(P)
    if not 1 <= i < j <= A.n:
        raise IndexOutOfRangeError(f"need 1 <= i < j <= {A.n}, got i={i}, j={j}")
    x = A.e(i)
    for m in range(i + 1, j):
        x = A.g(m) * x * A.g_inverse(m)
    if x != A.e_pair(i, j):
        raise IdentityFailure(f"conjugated e_{i} differs from e_({i},{j})")
    return x


def orbit_idempotent_sum(P: AlgebraLike, k: Sequence[int]) -> Element:
    """b_[k] as the sum of b_l over the Sym(r)-orbit of k."""
    A = _alg(P)
    k = A._check_color(k)
    return A.element({(l, A.identity): 1 for l in comb.orbit(k, A.r)})


def orbit_idempotent_product(P: AlgebraLike, k: Sequence[int]) -> Element:
    """prod_{k_i = k_j} e_{i,j} * prod_{k_i != k_j} (1 - e_{i,j}) over pairs i < j."""
    A = _alg(P)
    k = A._check_color(k)
    same, differ = A.one(), A.one()
    for i, j in combinations(range(1, A.n + 1), 2):
        if k[i - 1] == k[j - 1]:
            same = same * A.e_pair(i, j)
        else:
            differ = differ * (1 - A.e_pair(i, j))
    return same * differ


def orbit_idempotent(P: AlgebraLike, k: Sequence[int]) -> Element:
    A = _alg(P)
    by_sum = orbit_idempotent_sum(A, k)
    if by_sum != orbit_idempotent_product(A, k):
        raise IdentityFailure(f"orbit sum and product formula disagree for {list(k)}")
    return by_sum


def fixed_basis_labels(P: AlgebraLike) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    A = _alg(P)
    reps = [rep for rep, _ in comb.enumerate_orbit_representatives(A.n, A.r)]
    size = len(reps) * len(A.perms)
    if size > MAX_FIXED_DIMENSION:
        raise SizeGuardError(f"fixed basis of size {size} exceeds the guard of {MAX_FIXED_DIMENSION}")
    return [(rep, w) for rep in reps for w in A.perms]


def fixed_basis(P: AlgebraLike) -> list[Element]:
    """b_[k] g_w over orbit representatives k and all w."""
    A = _alg(P)
    out = []
    idempotents: dict = {}
    for rep, w in fixed_basis_labels(A):
        if rep not in idempotents:
            idempotents[rep] = orbit_idempotent(A, rep)
        out.append(idempotents[rep] * A.g_word(w))
    return out


def is_fixed(x: Element) -> bool:
    """Invariance under the generators (1 2) and (1 2 ... r) of Sym(r)."""
    A = x.algebra
    if A.r == 1:
        return True
    swap = (2, 1) + tuple(range(3, A.r + 1))
    cycle = tuple(range(2, A.r + 1)) + (1,)
    return all(A.sigma_action(s, x) == x for s in (swap, cycle))


def generation_check(P: AlgebraLike, return_span: bool = False):
    """Close span{1, g_i, e_i} under two-sided multiplication by the g_i and e_i.

    True iff the closure has the dimension of the fixed basis and every
    element added along the way is Sym(r)-fixed.
    """
    A = _alg(P)
    target = len(fixed_basis_labels(A))
    gens = [A.g(i) for i in range(1, A.n)] + [A.e(i) for i in range(1, A.n)]
    span = SpanBasis()
    queue: list[Element] = []
    all_fixed = True
    for x in [A.one()] + gens:
        if span.add(x.terms, x):
            queue.append(x)
            all_fixed &= is_fixed(x)
    while queue:
        x = queue.pop(0)
        for gen in gens:
            for y in (gen * x, x * gen):
                if span.add(y.terms, y):
                    queue.append(y)
                    all_fixed &= is_fixed(y)
        if span.rank > target:
            break
    ok = all_fixed and span.rank == target
    return (ok, span) if return_span else ok
