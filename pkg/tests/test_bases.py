import random
from fractions import Fraction

import pytest
import sympy

from makalg.algebra import algebra_for
from makalg.bases import (
    BASES,
    CoordinateVector,
    basis_element,
    basis_labels,
    change_of_basis_columns,
    change_of_basis_rank,
    from_coordinates,
    parameter_change_map,
    to_coordinates,
)
from makalg.errors import BadLabelError, ContextMismatchError
from makalg.scalars import validate_parameters


def sympy_rank(P, source, target):
    labels = basis_labels(P, target)
    index = {lab: i for i, lab in enumerate(labels)}
    cols = change_of_basis_columns(P, source, target)
    M = sympy.zeros(len(labels), len(cols))
    for j, col in enumerate(cols):
        for lab, v in col.items():
            M[index[lab], j] = sympy.Rational(v.numerator, v.denominator)
    return M.rank()


@pytest.mark.parametrize("source,target", [("bg", "tg"), ("tg", "tT"), ("tT", "bg")])
def test_change_of_basis_is_invertible_small(source, target):
    P = validate_parameters(2, 2, "3/2", [1, -1])
    assert change_of_basis_rank(P, source, target) == sympy_rank(P, source, target) == 8


def test_change_of_basis_rank_32():
    P = validate_parameters(3, 2, "3/2", [2, -1])
    for s, t in [("bg", "tg"), ("bg", "tT"), ("tg", "tT")]:
        assert change_of_basis_rank(P, s, t) == 48


def test_coordinate_examples():
    P = validate_parameters(1, 2, 2, [3, 5])
    A = algebra_for(P)
    assert to_coordinates(A.one(), "tg").entries == {((0,), (1,)): 1}
    # b_(1) = (X - u_2)/(u_1 - u_2)
    assert to_coordinates(A.b((1,)), "tg").entries == {((0,), (1,)): Fraction(5, 2), ((1,), (1,)): Fraction(-1, 2)}
    P3 = validate_parameters(3, 2, "3/2", [1, -1])
    A3 = algebra_for(P3)
    coords = to_coordinates(A3.g(1), "tT").entries
    s1 = (2, 1, 3)
    assert coords[((0, 0, 0), s1)] == 1
    assert all(w == (1, 2, 3) for (c, w) in coords if (c, w) != ((0, 0, 0), s1))
    assert from_coordinates(P3, CoordinateVector("tg", P3, {((0, 0, 0), (1, 2, 3)): 1})) == A3.one()
    assert from_coordinates(P3, CoordinateVector("tT", P3, {((0, 0, 0), s1): 1})) == A3.T(1)


@pytest.mark.parametrize("P", [validate_parameters(3, 2, "3/2", [1, -1]), validate_parameters(2, 3, 2, [1, "1/2", -3])], ids=str)
def test_round_trip_all_bases(P):
    A = algebra_for(P)
    rng = random.Random(3)
    for _ in range(10):
        x = A.random_element(rng)
        for basis in BASES:
            v = to_coordinates(x, basis)
            assert from_coordinates(P, v) == x
            assert CoordinateVector.from_dict(v.to_dict()) == v


def test_t_monomials_are_tg_basis_vectors():
    P = validate_parameters(2, 3, 2, [1, 2, 4])
    A = algebra_for(P)
    x = A.t(1) ** 2 * A.t(2) * A.g(1)
    assert to_coordinates(x, "tg").entries == {((2, 1), (2, 1)): 1}
    assert basis_element(P, "tg", ((2, 1), (2, 1))) == x


def test_bad_labels():
    P = validate_parameters(2, 2, 2, [1, -1])
    with pytest.raises(BadLabelError):
        from_coordinates(P, CoordinateVector("tg", P, {((2, 0), (1, 2)): 1}))
    with pytest.raises(BadLabelError):
        from_coordinates(P, CoordinateVector("bg", P, {((1, 1), (1, 1)): 1}))
    with pytest.raises(BadLabelError):
        CoordinateVector("xy", P, {})
    other = validate_parameters(2, 2, 3, [1, -1])
    with pytest.raises(ContextMismatchError):
        from_coordinates(P, CoordinateVector("bg", other, {}))


def test_parameter_change_examples():
    P = validate_parameters(2, 2, 2, [0, 1])
    change = parameter_change_map(P, P.with_u([1, 0]))
    assert change.coefficients == [1, -1]
    A = algebra_for(P)
    assert change.t_images[0] == 1 - A.t(1)
    same = parameter_change_map(P, P)
    assert same.coefficients == [0, 1]
    assert same.t_images == [A.t(1), A.t(2)]

    Q = validate_parameters(2, 2, "3/2", [1, -1])
    change = parameter_change_map(Q, Q.with_u([2, 5]))
    assert change.coefficients == [Fraction(7, 2), Fraction(-3, 2)]
    for t in change.t_images:
        assert (t - 2) * (t - 5) == algebra_for(Q).zero()
    with pytest.raises(ContextMismatchError):
        parameter_change_map(Q, validate_parameters(2, 2, 2, [2, 5]))
