import random
from itertools import permutations

import pytest

from makalg import combinatorics as comb
from makalg.algebra import algebra_for
from makalg.errors import IndexOutOfRangeError
from makalg.fixed import (
    conjugated_idempotent,
    fixed_basis,
    fixed_basis_labels,
    generation_check,
    is_fixed,
    orbit_idempotent,
    orbit_idempotent_product,
    orbit_idempotent_sum,
)
from makalg.linalg import rank
from makalg.scalars import validate_parameters


def params(n, r):
    return validate_parameters(n, r, "3/2", list(range(1, r + 1)))


@pytest.mark.parametrize("n,r,size", [(1, 2, 1), (2, 2, 4), (2, 3, 4), (3, 2, 24), (3, 3, 30)])
def test_fixed_basis_sizes(n, r, size):
    P = params(n, r)
    basis = fixed_basis(P)
    assert len(basis) == size
    assert rank([x.terms for x in basis]) == size
    assert all(is_fixed(x) for x in basis)


def test_fixed_basis_matches_symmetrization_oracle():
    """The span of sum_sigma sigma(b_k g_w) over all (k, w) is the fixed subalgebra."""
    P = params(3, 2)
    A = algebra_for(P)
    sym = []
    for k in A.colors:
        for w in A.perms:
            x = A.basis_element(k, w)
            sym.append(sum((A.sigma_action(s, x) for s in permutations((1, 2))), A.zero()).terms)
    basis = [x.terms for x in fixed_basis(P)]
    assert rank(sym) == rank(basis) == rank(sym + basis) == 24


def test_idempotent_examples():
    A = algebra_for(params(3, 2))
    assert orbit_idempotent(A, (1, 1, 1)) == A.b((1, 1, 1)) + A.b((2, 2, 2))
    assert orbit_idempotent(A, (1, 2, 1)) == A.b((1, 2, 1)) + A.b((2, 1, 2))
    for rep, _ in comb.enumerate_orbit_representatives(3, 2):
        assert orbit_idempotent_sum(A, rep) == orbit_idempotent_product(A, rep)


def test_conjugated_idempotents():
    A = algebra_for(params(4, 3))
    assert conjugated_idempotent(A, 1, 2) == A.e(1)
    assert A.g(2) * A.e(1) * A.g_inverse(2) == A.e_pair(1, 3)
    assert A.g(3) * A.g(2) * A.e(1) * A.g_inverse(2) * A.g_inverse(3) == A.e_pair(1, 4)
    for i in range(1, 4):
        for j in range(i + 1, 5):
            conjugated_idempotent(A, i, j)
    with pytest.raises(IndexOutOfRangeError):
        conjugated_idempotent(A, 2, 2)


def test_is_fixed():
    A = algebra_for(params(2, 2))
    assert is_fixed(A.g_word((2, 1)))
    assert is_fixed(A.e(1))
    assert not is_fixed(A.b((1, 2)))
    rng = random.Random(0)
    x = A.random_element(rng)
    assert is_fixed(x + A.sigma_action((2, 1), x))


@pytest.mark.parametrize("n,r", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_generation_reaches_full_rank(n, r):
    ok, span = generation_check(params(n, r), return_span=True)
    assert ok
    assert span.rank == len(fixed_basis_labels(params(n, r)))
