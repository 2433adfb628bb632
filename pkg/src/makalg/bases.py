"""
Coordinates in the three bases of the algebra and the change of parameters.

Basis tags:

``bg``  b_k g_w, the engine's normal form;
``tg``  t_1^{c_1} ... t_n^{c_n} g_w with 0 <= c_i <= r-1;
``tT``  t_1^{c_1} ... t_n^{c_n} T_w.

Labels are ``(k, w)`` for ``bg`` and ``(c, w)`` for the other two.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping

from . import combinatorics as comb
from .algebra import Algebra, Element, _alg, AlgebraLike
from .errors import BadLabelError, ContextMismatchError, IdentityFailure
from .linalg import rank, solve
from .polynomials import lagrange_polynomial
from .scalars import ParameterSet, format_scalar, to_scalar

BASES = ("bg", "tg", "tT")


@dataclass
class CoordinateVector:
    basis: str
    params: ParameterSet
    entries: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise BadLabelError(f"unknown basis {self.basis!r}")
        self.entries = {(tuple(a), tuple(w)): to_scalar(v) for (a, w), v in self.entries.items() if v}

    def sorted_entries(self) -> list:
        return sorted(self.entries.items())

    def to_dict(self) -> dict:
        first = "k" if self.basis == "bg" else "c"
        return {
            "basis": self.basis,
            "context": self.params.to_dict(),
            "entries": [
                {first: list(a), "w": list(w), "value": format_scalar(v)} for (a, w), v in self.sorted_entries()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CoordinateVector":
        basis = data["basis"]
        first = "k" if basis == "bg" else "c"
        entries: dict = defaultdict(Fraction)
        for e in data["entries"]:
            entries[(tuple(e[first]), tuple(e["w"]))] += to_scalar(e["value"])
        return cls(basis, ParameterSet.from_dict(data["context"]), dict(entries))


def exponent_vectors(n: int, r: int) -> list[tuple[int, ...]]:
    return list(product(range(r), repeat=n))


def basis_labels(P: AlgebraLike, basis: str) -> list:
    A = _alg(P)
    if basis == "bg":
        return [(k, w) for w in A.perms for k in A.colors]
    if basis in ("tg", "tT"):
        return [(c, w) for w in A.perms for c in exponent_vectors(A.n, A.r)]
    raise BadLabelError(f"unknown basis {basis!r}")


def _lagrange_table(A: Algebra) -> list[tuple[Fraction, ...]]:
    """Row c-1 holds the coefficients of L_c padded to length r."""
    rows = []
    for c in range(1, A.r + 1):
        L = lagrange_polynomial(A.params, c)
        rows.append(tuple(L.coefficient(j) for j in range(A.r)))
    return rows


def _b_to_monomials(A: Algebra, k) -> dict[tuple[int, ...], Fraction]:
    """b_k = prod_i L_{k_i}(t_i) expanded over t-monomials."""
    table = _lagrange_table(A)
    out = {}
    for c in exponent_vectors(A.n, A.r):
        v = Fraction(1)
        for ki, ci in zip(k, c):
            v *= table[ki - 1][ci]
            if not v:
                break
        if v:
            out[c] = v
    return out


def _monomial_value(A: Algebra, c, k) -> Fraction:
    """t^c b_k = (prod_i u_{k_i}^{c_i}) b_k."""
    v = Fraction(1)
    for ci, ki in zip(c, k):
        v *= A.u[ki - 1] ** ci
    return v


def _diagonal_to_monomials(A: Algebra, coeffs: Mapping) -> dict[tuple[int, ...], Fraction]:
    out: dict = defaultdict(Fraction)
    for k, a in coeffs.items():
        for c, v in _b_to_monomials(A, k).items():
            out[c] += a * v
    return {c: v for c, v in out.items() if v}


def to_coordinates(x: Element, basis: str) -> CoordinateVector:
    A = x.algebra
    if basis == "bg":
        return CoordinateVector("bg", A.params, dict(x.terms))
    if basis == "tg":
        by_w: dict = defaultdict(dict)
        for (k, w), a in x.terms.items():
            by_w[w][k] = a
        entries = {}
        for w, coeffs in by_w.items():
            for c, v in _diagonal_to_monomials(A, coeffs).items():
                entries[(c, w)] = v
        return CoordinateVector("tg", A.params, entries)
    if basis == "tT":
        return CoordinateVector("tT", A.params, _tT_entries(x))
    raise BadLabelError(f"unknown basis {basis!r}")


def _tT_entries(x: Element) -> dict:
    """Peel off the top-length g_w component against f_w(t) T_w.

    T_w = g_w + (terms supported on shorter permutations), so processing
    permutations by decreasing length clears each one exactly once.
    """
    A = x.algebra
    residual = x
    entries = {}
    for w in sorted(A.perms, key=lambda v: (-comb.length(v), v)):
        coeffs = {k: a for (k, v), a in residual.terms.items() if v == w}
        if not coeffs:
            continue
        f = A.element({(k, A.identity): a for k, a in coeffs.items()})
        residual = residual - f * A.T_word(w)
        for c, v in _diagonal_to_monomials(A, coeffs).items():
            entries[(c, w)] = v
    if residual:
        raise IdentityFailure("tT elimination left a nonzero residual")
    return entries


def _check_labels(A: Algebra, v: CoordinateVector) -> None:
    for (a, w) in v.entries:
        if len(w) != A.n or not comb.is_permutation(w):
            raise BadLabelError(f"{list(w)} is not a permutation of [1,{A.n}]")
        if len(a) != A.n:
            raise BadLabelError(f"label {list(a)} has the wrong length")
        if v.basis == "bg":
            if any(not 1 <= c <= A.r for c in a):
                raise BadLabelError(f"color vector {list(a)} outside [1,{A.r}]")
        elif any(not 0 <= c <= A.r - 1 for c in a):
            raise BadLabelError(f"exponent vector {list(a)} outside [0,{A.r - 1}]")


def from_coordinates(P: AlgebraLike, v: CoordinateVector) -> Element:
    A = _alg(P)
    if v.params != A.params:
        raise ContextMismatchError("coordinate vector was built for different parameters")
    _check_labels(A, v)
    if v.basis == "bg":
        return A.element(v.entries)
    by_w: dict = defaultdict(dict)
    for (c, w), a in v.entries.items():
        by_w[w][c] = a
    out = A.zero()
    for w, monos in sorted(by_w.items()):
        diag = {}
        for k in A.colors:
            s = sum((a * _monomial_value(A, c, k) for c, a in monos.items()), Fraction(0))
            if s:
                diag[k] = s
        if v.basis == "tg":
            out = out + A.element({(k, w): s for k, s in diag.items()})
        else:
            f = A.element({(k, A.identity): s for k, s in diag.items()})
            out = out + f * A.T_word(w)
    return out


def basis_element(P: AlgebraLike, basis: str, label) -> Element:
    A = _alg(P)
    return from_coordinates(A, CoordinateVector(basis, A.params, {label: 1}))


def change_of_basis_columns(P: AlgebraLike, source: str, target: str) -> list[dict]:
    """Column j = target coordinates of the j-th source basis element."""
    A = _alg(P)
    cols = []
    for label in basis_labels(A, source):
        x = basis_element(A, source, label)
        cols.append(to_coordinates(x, target).entries)
    return cols


def change_of_basis_rank(P: AlgebraLike, source: str, target: str) -> int:
    return rank(change_of_basis_columns(P, source, target))


@dataclass
class ParameterChange:
    source: ParameterSet
    target: ParameterSet
    coefficients: list[Fraction]
    t_images: list[Element]
    T_images: list[Element]

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "a": [format_scalar(a) for a in self.coefficients],
            "t_images": [x.to_dict()["terms"] for x in self.t_images],
        }


def parameter_change_map(P: ParameterSet, P_tilde: ParameterSet) -> ParameterChange:
    """Images of the generators of the algebra at ``P_tilde`` inside the algebra at ``P``.

    t~_i goes to sum_j a_j t_i^j where sum_j a_j u_c^j = u~_c, and T~_j to T_j.
    """
    if (P.n, P.r, P.q) != (P_tilde.n, P_tilde.r, P_tilde.q):
        raise ContextMismatchError("parameter change needs the same n, r and q")
    A = _alg(P)
    system = [[uc**j for j in range(P.r)] for uc in P.u]
    a = solve(system, list(P_tilde.u))
    t_images = []
    for i in range(1, P.n + 1):
        via_powers = A.t(i).polynomial(a)
        via_idempotents = A.from_color_function(lambda k: P_tilde.u[k[i - 1] - 1])
        if via_powers != via_idempotents:
            raise IdentityFailure(f"the two images of t~_{i} disagree")
        t_images.append(via_powers)
    T_images = [A.T(j) for j in range(1, P.n)]
    return ParameterChange(P, P_tilde, a, t_images, T_images)
