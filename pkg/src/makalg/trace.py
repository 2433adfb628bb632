"""The trace form tau, the dual basis and the Gram pairing."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import combinatorics as comb
from .algebra import AlgebraLike, Algebra, Element, _alg
from .bases import basis_element, basis_labels, to_coordinates
from .errors import (
    IdentityFailure,
    IndexOutOfRangeError,
    NotSymmetrizingError,
    OutOfRangeError,
    SizeGuardError,
)
from .polynomials import lagrange_polynomial
from .scalars import ParameterSet, complete_homogeneous, format_scalar

MAX_GRAM_PAIRINGS = 250_000


def tau_oracle(x: Element) -> Fraction:
    """tau read off the tg coordinates: the coefficient of t^0 g_id."""
    A = x.algebra
    return to_coordinates(x, "tg").entries.get(((0,) * A.n, A.identity), Fraction(0))


def trace_weights(A: Algebra) -> dict:
    """gamma(k) = prod_i L_{k_i}(0), checked once against :func:`tau_oracle`."""
    weights = A.cache.get("trace_weights")
    if weights is None:
        const = [lagrange_polynomial(A.params, c).coefficient(0) for c in range(1, A.r + 1)]
        weights = {}
        for k in A.colors:
            gamma = Fraction(1)
            for c in k:
                gamma *= const[c - 1]
            if gamma != tau_oracle(A.b(k)):
                raise IdentityFailure(f"closed-form trace weight disagrees with the oracle at b_{k}")
            weights[k] = gamma
        A.cache["trace_weights"] = weights
    return weights


def tau(x: Element) -> Fraction:
    A = x.algebra
    weights = trace_weights(A)
    ident = A.identity
    return sum((c * weights[k] for (k, w), c in x.terms.items() if w == ident), Fraction(0))


def tau_power_check(P: AlgebraLike, s: int, i: int) -> tuple[Fraction, Fraction]:
    """tau(t_i^{r+s}) computed in the engine, next to (-1)^{r+1} sigma_r h_s."""
    A = _alg(P)
    if not 0 <= s <= A.r - 1:
        raise OutOfRangeError(f"s must lie in [0, {A.r - 1}]")
    if not 1 <= i <= A.n:
        raise OutOfRangeError(f"i must lie in [1, {A.n}]")
    lhs = tau(A.t(i) ** (A.r + s))
    rhs = (-1) ** (A.r + 1) * A.params.sigmas[A.r] * complete_homogeneous(A.params, s)
    return lhs, rhs


def _require_symmetrizing(params: ParameterSet) -> None:
    if not params.symmetrizing_ok:
        raise NotSymmetrizingError("sigma_r = u_1 ... u_r is zero; tau is not symmetrizing")


def dual_t_power(P: AlgebraLike, i: int, c: int) -> Element:
    """(t_i^c)^vee = ((-1)^{r+1} / sigma_r) sum_{j=0}^{r-c-1} (-1)^j sigma_j t_i^{r-c-j}."""
    A = _alg(P)
    _require_symmetrizing(A.params)
    r, sig = A.r, A.params.sigmas
    if not 1 <= c <= r - 1:
        raise OutOfRangeError(f"exponent {c} outside [1, {r - 1}]")
    coeffs = [Fraction(0)] * (r + 1)
    for j in range(r - c):
        coeffs[r - c - j] += (-1) ** j * sig[j]
    pre = Fraction((-1) ** (r + 1)) / sig[r]
    return A.t(i).polynomial([pre * x for x in coeffs])


def dual_basis_element(P: AlgebraLike, c: Sequence[int], w: Sequence[int]) -> Element:
    """(t^c g_w)^vee = g_{w^{-1}} prod_{c_i != 0} (t_i^{c_i})^vee."""
    A = _alg(P)
    _require_symmetrizing(A.params)
    c, w = tuple(c), tuple(w)
    if len(c) != A.n or any(not 0 <= ci <= A.r - 1 for ci in c):
        raise IndexOutOfRangeError(f"exponent vector {list(c)} outside [0,{A.r - 1}]^{A.n}")
    out = A.g_word(comb.inverse(A._check_perm(w)))
    for i, ci in enumerate(c, start=1):
        if ci:
            out = out * dual_t_power(A, i, ci)
    return out


@dataclass
class GramReport:
    params: ParameterSet
    size: int
    entries: dict = field(default_factory=dict)
    is_identity: bool = False
    counterexample: Optional[tuple] = None

    def status_line(self) -> str:
        if self.is_identity:
            return "IDENTITY"
        (c, w), (d, v) = self.counterexample
        return f"FAIL c={list(c)} w={list(w)} d={list(d)} u={list(v)}"

    def to_dict(self) -> dict:
        def label(x):
            return {"c": list(x[0]), "w": list(x[1])}

        return {
            "context": self.params.to_dict(),
            "size": self.size,
            "is_identity": self.is_identity,
            "counterexample": None
            if self.counterexample is None
            else [label(self.counterexample[0]), label(self.counterexample[1])],
            "entries": [
                {"row": label(a), "col": label(b), "value": format_scalar(v)}
                for (a, b), v in sorted(self.entries.items())
            ],
        }


def gram_check(P: AlgebraLike) -> GramReport:
    """tau(t^c g_w (t^d g_v)^vee) over all pairs of tg labels."""
    A = _alg(P)
    _require_symmetrizing(A.params)
    labels = basis_labels(A, "tg")
    if len(labels) ** 2 > MAX_GRAM_PAIRINGS:
        raise SizeGuardError(f"{len(labels)}^2 pairings exceed the guard of {MAX_GRAM_PAIRINGS}")
    left = [basis_element(A, "tg", lab) for lab in labels]
    right = [dual_basis_element(A, *lab) for lab in labels]
    entries = {}
    counterexample = None
    for a, x in zip(labels, left):
        for b, y in zip(labels, right):
            v = tau(x * y)
            if v:
                entries[(a, b)] = v
            if v != (1 if a == b else 0) and counterexample is None:
                counterexample = (a, b)
    return GramReport(A.params, len(labels), entries, counterexample is None, counterexample)


def trace_property_check(P: AlgebraLike, trials: int, seed: int) -> bool:
    """tau(xy) == tau(yx) on ``trials`` seeded random pairs."""
    A = _alg(P)
    rng = random.Random(seed)
    for _ in range(trials):
        x, y = A.random_element(rng), A.random_element(rng)
        if tau(x * y) != tau(y * x):
            return False
    return True

