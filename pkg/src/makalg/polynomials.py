"""Dense univariate polynomials over exact rationals, and the interpolants
L_c and F_c attached to a parameter set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IdentityFailure, IndexOutOfRangeError
from .linalg import solve
from .scalars import ParameterSet, ScalarLike, format_scalar, to_scalar


@dataclass(frozen=True)
class UniPolynomial:
    """c_0 + c_1 X + ... + c_d X^d with trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[ScalarLike] = ()):
        cs = [to_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, c: ScalarLike = 1) -> "UniPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __call__(self, x: ScalarLike) -> Fraction:
        x = to_scalar(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPolynomial") -> "UniPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return UniPolynomial([self.coefficient(j) + other.coefficient(j) for j in range(m)])

    def __sub__(self, other: "UniPolynomial") -> "UniPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "UniPolynomial") -> "UniPolynomial":
        if not self.coeffs or not other.coeffs:
            return UniPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPolynomial(out)

    def scale(self, c: ScalarLike) -> "UniPolynomial":
        c = to_scalar(c)
        return UniPolynomial([c * a for a in self.coeffs])

    def divmod_monic(self, divisor: "UniPolynomial") -> tuple["UniPolynomial", "UniPolynomial"]:
        """Quotient and remainder by a monic polynomial."""
        if divisor.degree < 0 or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c:
                quot[top - d] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[top - d + j] -= c * dc
        return UniPolynomial(quot), UniPolynomial(rem[:d])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{format_scalar(c)}*X^{j}" if j else format_scalar(c))
        return " + ".join(parts)


def from_roots(roots: Sequence[ScalarLike]) -> UniPolynomial:
    """prod (X - root)."""
    p = UniPolynomial([1])
    for a in roots:
        p = p * UniPolynomial([-to_scalar(a), 1])
    return p


def _check_color(params: ParameterSet, c: int) -> None:
    if not 1 <= c <= params.r:
        raise IndexOutOfRangeError(f"color {c} outside [1, {params.r}]")


def lagrange_polynomial(params: ParameterSet, c: int) -> UniPolynomial:
    """L_c: degree r-1, L_c(u_{c'}) = [c == c']."""
    _check_color(params, c)
    uc = params.u[c - 1]
    p = UniPolynomial([1])
    for j, uj in enumerate(params.u, start=1):
        if j != c:
            p = p * UniPolynomial([-uj, 1]).scale(1 / (uc - uj))
    return p


def vandermonde(params: ParameterSet) -> list[list[Fraction]]:
    """V with V[i][j] = u_j^i (0-based)."""
    return [[uj**i for uj in params.u] for i in range(params.r)]


def F_polynomial(params: ParameterSet, c: int) -> UniPolynomial:
    """F_c: degree r-1 with F_c(u_{c'}) = [c == c'] * Delta.

    Solved from the interpolation constraints, then cross-checked against
    Delta * L_c.
    """
    _check_color(params, c)
    r = params.r
    system = [[ui**j for j in range(r)] for ui in params.u]
    rhs = [params.delta if i == c - 1 else Fraction(0) for i in range(r)]
    F = UniPolynomial(solve(system, rhs))
    if F != lagrange_polynomial(params, c).scale(params.delta):
        raise IdentityFailure(f"F_{c} disagrees with Delta * L_{c}")
    return F


def H_matrix(params: ParameterSet) -> list[list[Fraction]]:
    """Row c holds the coefficients of F_{c+1}; equals Delta * V^{-1}."""
    return [
        [F_polynomial(params, c).coefficient(j) for j in range(params.r)]
        for c in range(1, params.r + 1)
    ]


def t_power_reduction(params: ParameterSet) -> UniPolynomial:
    """X^r reduced modulo prod (X - u_j), i.e. the right side of
    t^r = sum_k (-1)^{r-k+1} sigma_{r-k} t^k."""
    r = params.r
    return UniPolynomial([(-1) ** (r - k + 1) * params.sigmas[r - k] for k in range(r)])
