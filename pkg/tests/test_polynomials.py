from fractions import Fraction

import pytest
import sympy

from makalg.errors import IndexOutOfRangeError
from makalg.linalg import SpanBasis, rank, solve
from makalg.polynomials import (
    F_polynomial,
    UniPolynomial,
    from_roots,
    lagrange_polynomial,
    t_power_reduction,
    vandermonde,
)
from makalg.scalars import validate_parameters

X = sympy.Symbol("X")


def sympy_coeffs(expr, r):
    poly = sympy.Poly(sympy.expand(expr), X)
    return [Fraction(str(poly.coeff_monomial(X**j))) for j in range(r)]


@pytest.mark.parametrize("u", [[1, -1], [1, 2, 3], ["1/2", -3, 5, 7]])
def test_lagrange_matches_sympy_interpolation(u):
    P = validate_parameters(1, len(u), 2, u)
    for c in range(1, P.r + 1):
        data = [(sympy.Rational(str(x)), 1 if j == c - 1 else 0) for j, x in enumerate(P.u)]
        expected = sympy_coeffs(sympy.interpolate(data, X), P.r)
        L = lagrange_polynomial(P, c)
        assert [L.coefficient(j) for j in range(P.r)] == expected
        assert [L(x) for x in P.u] == [1 if j == c - 1 else 0 for j in range(P.r)]


def test_F_is_delta_times_lagrange():
    P = validate_parameters(1, 3, 2, [1, 2, 3])
    assert F_polynomial(P, 1).coeffs == (6, -5, 1)
    for c in range(1, 4):
        assert F_polynomial(P, c) == lagrange_polynomial(P, c).scale(P.delta)
    P2 = validate_parameters(1, 2, 2, [1, -1])
    assert F_polynomial(P2, 1).coeffs == (-1, -1)
    assert F_polynomial(P2, 2).coeffs == (-1, 1)
    with pytest.raises(IndexOutOfRangeError):
        lagrange_polynomial(P, 4)


def test_t_power_reduction_is_the_annihilating_polynomial():
    P = validate_parameters(1, 3, 2, [1, 2, 4])
    red = t_power_reduction(P)
    # X^3 = 7 X^2 - 14 X + 8
    assert red.coeffs == (8, -14, 7)
    assert UniPolynomial.monomial(3) - red == from_roots(P.u)


def test_vandermonde_shape():
    P = validate_parameters(1, 3, 2, [1, 2, 4])
    assert vandermonde(P) == [[1, 1, 1], [1, 2, 4], [1, 4, 16]]


def test_polynomial_arithmetic():
    p = from_roots([1, 2])
    q, rem = (p * UniPolynomial([1, 1]) + UniPolynomial([3])).divmod_monic(p)
    assert q == UniPolynomial([1, 1]) and rem == UniPolynomial([3])
    assert UniPolynomial([0, 0]).degree == -1
    assert UniPolynomial([0, 0]).coeffs == ()


def test_exact_solve_and_rank_against_sympy():
    M = [[Fraction(2), Fraction(1), Fraction(-1)], [Fraction(-3), Fraction(-1), Fraction(2)], [Fraction(-2), Fraction(1), Fraction(2)]]
    x = solve(M, [Fraction(8), Fraction(-11), Fraction(-3)])
    assert x == [2, 3, -1]
    vecs = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert rank(vecs) == sympy.Matrix([[1, 2, 0], [2, 4, 0], [0, 0, 1]]).rank() == 2
    span = SpanBasis()
    assert span.add(vecs[0]) and not span.add(vecs[1]) and span.add(vecs[2])
    assert span.contains({0: Fraction(3), 1: Fraction(6), 2: Fraction(-1)})
