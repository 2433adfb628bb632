"""Exact scalars, parameter sets and the symmetric functions of u_1..u_r.

Scalars are :class:`fractions.Fraction` values.  They are always kept in
canonical reduced form, so equality is structural and no rounding occurs
anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import BadShapeError, OutOfRangeError, RepeatedUError, ZeroQError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_SCALAR_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*")


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into an exact scalar.

    >>> to_scalar("-6/4")
    Fraction(-3, 2)
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _SCALAR_RE.fullmatch(value)
        if m is None:
            raise ValueError(f"not a rational literal: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact scalar")


def format_scalar(x: Fraction) -> str:
    """Serialize as ``"p"`` or ``"p/q"``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def elementary_symmetric_values(values: Sequence[Fraction]) -> list[Fraction]:
    """Return [sigma_0, ..., sigma_r] of ``values``.

    Built by expanding prod_i (1 + u_i Y) one factor at a time.
    """
    coeffs = [Fraction(1)]
    for v in values:
        nxt = coeffs + [Fraction(0)]
        for j in range(len(coeffs), 0, -1):
            nxt[j] += v * coeffs[j - 1]
        coeffs = nxt
    return coeffs


def complete_homogeneous_values(values: Sequence[Fraction], s_max: int) -> list[Fraction]:
    """Return [h_0, ..., h_{s_max}] of ``values``.

    Each variable is absorbed in turn: h_s(u_1..u_m) = sum_a u_m^a h_{s-a}(u_1..u_{m-1}).
    """
    h = [Fraction(1)] + [Fraction(0)] * s_max
    for v in values:
        nxt = [Fraction(0)] * (s_max + 1)
        for s in range(s_max + 1):
            power = Fraction(1)
            acc = Fraction(0)
            for a in range(s + 1):
                acc += power * h[s - a]
                power *= v
            nxt[s] = acc
        h = nxt
    return h


@dataclass(frozen=True)
class ParameterSet:
    """The data (n, r, q, u_1..u_r) defining one algebra.

    Construction validates q != 0 and that the u_i are pairwise distinct.
    """

    n: int
    r: int
    q: Fraction
    u: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise OutOfRangeError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.r, int) or self.r < 1:
            raise OutOfRangeError(f"r must be a positive integer, got {self.r!r}")
        object.__setattr__(self, "q", to_scalar(self.q))
        object.__setattr__(self, "u", tuple(to_scalar(x) for x in self.u))
        if len(self.u) != self.r:
            raise BadShapeError(f"expected {self.r} values of u, got {len(self.u)}")
        if self.q == 0:
            raise ZeroQError("q must be invertible")
        if len(set(self.u)) != self.r:
            raise RepeatedUError(f"u has a repeated entry: {[format_scalar(x) for x in self.u]}")

    @cached_property
    def delta(self) -> Fraction:
        """prod_{i>j} (u_i - u_j)."""
        d = Fraction(1)
        for i in range(self.r):
            for j in range(i):
                d *= self.u[i] - self.u[j]
        return d

    @cached_property
    def qdiff(self) -> Fraction:
        """q - q^{-1}."""
        return self.q - 1 / self.q

    @cached_property
    def sigmas(self) -> tuple[Fraction, ...]:
        return tuple(elementary_symmetric_values(self.u))

    @property
    def symmetrizing_ok(self) -> bool:
        return self.sigmas[self.r] != 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "q": format_scalar(self.q),
            "u": [format_scalar(x) for x in self.u],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ParameterSet":
        try:
            return validate_parameters(data["n"], data["r"], data["q"], data["u"])
        except KeyError as exc:
            raise BadShapeError(f"parameter set is missing key {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "ParameterSet":
        return cls.from_dict(json.loads(text))

    def with_u(self, u: Iterable[ScalarLike]) -> "ParameterSet":
        return validate_parameters(self.n, self.r, self.q, list(u))


def validate_parameters(n: int, r: int, q: ScalarLike, u: Sequence[ScalarLike]) -> ParameterSet:
    """Build a :class:`ParameterSet`, raising on non-invertible q or Delta.

    >>> validate_parameters(2, 2, 1, [1, -1]).symmetrizing_ok
    True
    """
    if len(u) != r:
        raise BadShapeError(f"expected {r} values of u, got {len(u)}")
    return ParameterSet(n, r, to_scalar(q), tuple(to_scalar(x) for x in u))


def elementary_symmetric(params: ParameterSet, j: int) -> Fraction:
    if j < 0 or j > params.r:
        raise OutOfRangeError(f"sigma_j needs 0 <= j <= {params.r}, got {j}")
    return params.sigmas[j]


def complete_homogeneous(params: ParameterSet, s: int) -> Fraction:
    if s < 0:
        raise OutOfRangeError(f"h_s needs s >= 0, got {s}")
    return complete_homogeneous_values(params.u, s)[s]
