"""
The algebra engine.

Elements are sparse linear combinations of the normal-form basis
``b_k g_w`` (k a color vector, w a permutation).  Products are computed with
two right-fold rules:

* ``(b_k g_w) b_m = [k == w.m] b_k g_w``
* ``(b_k g_w) g_i = b_k g_{w s_i}`` when ``w(i) < w(i+1)``, and otherwise
  ``b_k g_{w s_i} + (q - q^{-1}) [k_{w(i)} == k_{w(i+1)}] b_k g_w``.

The color vector never changes while folding, so a product of basis
elements is a combination of ``b_k g_{w'}`` with the left color ``k``.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from . import combinatorics as comb
from .combinatorics import ColorVector, Permutation
from .errors import (
    ContextMismatchError,
    IndexOutOfRangeError,
    SizeGuardError,
    SizeMismatchError,
)
from .scalars import ParameterSet, ScalarLike, format_scalar, to_scalar

MAX_BASIS_SIZE = 10**6

Key = tuple[ColorVector, Permutation]


class Algebra:
    """The modified Ariki-Koike algebra for one parameter set.

    Holds the parameters plus memo tables that only cache pure functions of
    them (reduced words, inverses, folded products of basis elements).
    """

    def __init__(self, params: ParameterSet):
        size = params.r**params.n * math.factorial(params.n)
        if size > MAX_BASIS_SIZE:
            raise SizeGuardError(f"basis of size {size} exceeds the guard of {MAX_BASIS_SIZE}")
        self.params = params
        self.n = params.n
        self.r = params.r
        self.q = params.q
        self.u = params.u
        self.qdiff = params.qdiff
        self.basis_size = size
        self.identity = comb.identity(self.n)
        self.colors = comb.color_vectors(self.n, self.r)
        self.perms = comb.all_permutations(self.n)
        self._inverse = {w: comb.inverse(w) for w in self.perms}
        self._fold_cache: dict[tuple[ColorVector, Permutation, Permutation], dict] = {}
        self._g_word_cache: dict[Permutation, Element] = {}
        self._T_word_cache: dict[Permutation, Element] = {}
        # per-parameter memo space for other modules
        self.cache: dict = {}

    def __repr__(self) -> str:
        return f"Algebra({self.params!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.params == other.params

    def __hash__(self) -> int:
        return hash(self.params)

    # -- construction -----------------------------------------------------

    def element(self, terms: Mapping[Key, ScalarLike]) -> "Element":
        clean = {}
        for (k, w), c in terms.items():
            c = to_scalar(c)
            if c:
                clean[(tuple(k), tuple(w))] = c
        return Element(self, clean)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {(k, self.identity): Fraction(1) for k in self.colors})

    def scalar(self, c: ScalarLike) -> "Element":
        return self.one() * to_scalar(c)

    def basis_element(self, k: Sequence[int], w: Sequence[int]) -> "Element":
        k, w = self._check_color(k), self._check_perm(w)
        return Element(self, {(k, w): Fraction(1)})

    def from_color_function(self, f, w: Permutation | None = None) -> "Element":
        """sum_k f(k) b_k g_w."""
        w = self.identity if w is None else w
        return self.element({(k, w): f(k) for k in self.colors})

    # -- generators -------------------------------------------------------

    def _check_index(self, i: int, lo: int, hi: int, name: str) -> None:
        if not isinstance(i, int) or not lo <= i <= hi:
            raise IndexOutOfRangeError(f"{name} index {i} outside [{lo}, {hi}] for n={self.n}")

    def _check_color(self, k: Sequence[int]) -> ColorVector:
        k = tuple(k)
        if len(k) != self.n or any(not 1 <= c <= self.r for c in k):
            raise IndexOutOfRangeError(f"color vector {list(k)} is not in [1,{self.r}]^{self.n}")
        return k

    def _check_perm(self, w: Sequence[int]) -> Permutation:
        w = tuple(w)
        if len(w) != self.n or not comb.is_permutation(w):
            raise IndexOutOfRangeError(f"{list(w)} is not a permutation of [1,{self.n}]")
        return w

    def b(self, k: Sequence[int]) -> "Element":
        return self.basis_element(k, self.identity)

    def t(self, i: int) -> "Element":
        """t_i = sum_k u_{k_i} b_k."""
        self._check_index(i, 1, self.n, "t")
        return self.from_color_function(lambda k: self.u[k[i - 1] - 1])

    def e(self, i: int) -> "Element":
        self._check_index(i, 1, self.n - 1, "e")
        return self.e_pair(i, i + 1)

    def e_pair(self, i: int, j: int) -> "Element":
        """e_{i,j} = sum over k with k_i = k_j of b_k."""
        self._check_index(i, 1, self.n, "e_pair")
        self._check_index(j, 1, self.n, "e_pair")
        return self.from_color_function(lambda k: 1 if k[i - 1] == k[j - 1] else 0)

    def Bprime(self, i: int, j: int) -> "Element":
        """B'_{i,j} = -(q - q^{-1}) sum over k with k_i < k_j of b_k."""
        self._check_index(i, 1, self.n, "Bprime")
        self._check_index(j, 1, self.n, "Bprime")
        return self.from_color_function(lambda k: -self.qdiff if k[i - 1] < k[j - 1] else 0)

    def B(self, i: int) -> "Element":
        """B_i = (q - q^{-1}) sum over k_i < k_{i+1} of (u_{k_i} - u_{k_{i+1}}) b_k."""
        self._check_index(i, 1, self.n - 1, "B")

        def coeff(k):
            a, c = k[i - 1], k[i]
            return self.qdiff * (self.u[a - 1] - self.u[c - 1]) if a < c else 0

        return self.from_color_function(coeff)

    def g(self, i: int) -> "Element":
        self._check_index(i, 1, self.n - 1, "g")
        s = comb.simple_reflection(self.n, i)
        return Element(self, {(k, s): Fraction(1) for k in self.colors})

    def T(self, i: int) -> "Element":
        """T_i = g_i - B'_{i,i+1}."""
        return self.g(i) - self.Bprime(i, i + 1)

    def g_inverse(self, i: int) -> "Element":
        """g_i^{-1} = g_i - (q - q^{-1}) e_i."""
        return self.g(i) - self.e(i) * self.qdiff

    def g_word(self, w: Sequence[int]) -> "Element":
        """g_w as the product of g generators along the canonical reduced word."""
        w = self._check_perm(w)
        if w not in self._g_word_cache:
            self._g_word_cache[w] = self.word_product([self.g(i) for i in comb.reduced_word(w)])
        return self._g_word_cache[w]

    def T_word(self, w: Sequence[int]) -> "Element":
        """T_w as the product of T generators along the canonical reduced word."""
        w = self._check_perm(w)
        if w not in self._T_word_cache:
            self._T_word_cache[w] = self.word_product([self.T(i) for i in comb.reduced_word(w)])
        return self._T_word_cache[w]

    def word_product(self, factors: Iterable["Element"]) -> "Element":
        out = self.one()
        for f in factors:
            out = out * f
        return out

    def generator(self, name: str, *indices) -> "Element":
        """Look up a named element: b, g, t, T, e, e_pair, Bprime, B."""
        table = {
            "b": self.b,
            "g": self.g,
            "t": self.t,
            "T": self.T,
            "e": self.e,
            "e_pair": self.e_pair,
            "Bprime": self.Bprime,
            "B": self.B,
        }
        try:
            fn = table[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None
        return fn(*indices)

    # -- products ---------------------------------------------------------

    def _fold(self, k: ColorVector, w: Permutation, v: Permutation) -> dict[Permutation, Fraction]:
        """Coefficients of b_k g_w g_v over the b_k g_{w'}."""
        key = (k, w, v)
        cached = self._fold_cache.get(key)
        if cached is not None:
            return cached
        current = {w: Fraction(1)}
        qd = self.qdiff
        for i in comb.reduced_word(v):
            nxt: dict[Permutation, Fraction] = defaultdict(Fraction)
            for x, c in current.items():
                nxt[comb.right_multiply_simple(x, i)] += c
                if x[i - 1] > x[i] and qd and k[x[i - 1] - 1] == k[x[i] - 1]:
                    nxt[x] += qd * c
            current = {x: c for x, c in nxt.items() if c}
        self._fold_cache[key] = current
        return current

    def multiply(self, x: "Element", y: "Element") -> "Element":
        self._same(x, y)
        by_color: dict[ColorVector, list[tuple[Permutation, Fraction]]] = defaultdict(list)
        for (m, v), c in y.terms.items():
            by_color[m].append((v, c))
        out: dict[Key, Fraction] = defaultdict(Fraction)
        for (k, w), a in x.terms.items():
            m = comb.place_act(self._inverse[w], k)
            for v, c in by_color.get(m, ()):
                ac = a * c
                for w2, d in self._fold(k, w, v).items():
                    out[(k, w2)] += ac * d
        return Element(self, {key: c for key, c in out.items() if c})

    def _same(self, x: "Element", y: "Element") -> None:
        if x.algebra is not self and x.algebra != self:
            raise ContextMismatchError("element belongs to a different algebra")
        if y.algebra is not self and y.algebra != self:
            raise ContextMismatchError("element belongs to a different algebra")

    # -- Sym(r) action ----------------------------------------------------

    def sigma_action(self, sigma: Sequence[int], x: "Element") -> "Element":
        """Relabel the colors of every term by ``sigma``; g_w and coefficients stay."""
        sigma = tuple(sigma)
        if len(sigma) != self.r or not comb.is_permutation(sigma):
            raise SizeMismatchError(f"{list(sigma)} is not a permutation of [1,{self.r}]")
        return Element(self, {(comb.color_act(sigma, k), w): c for (k, w), c in x.terms.items()})

    # -- sampling ---------------------------------------------------------

    def random_element(self, rng: random.Random, max_terms: int = 8, bound: int = 20) -> "Element":
        """A random element with at most ``max_terms`` terms.

        Coefficients are p/q with |p| <= bound and 1 <= q <= bound.
        """
        terms: dict[Key, Fraction] = {}
        for _ in range(rng.randint(1, max_terms)):
            k = rng.choice(self.colors)
            w = rng.choice(self.perms)
            terms[(k, w)] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return self.element(terms)


class Element:
    """A sparse combination of the basis symbols ``b_k g_w``.

    Treat as immutable; arithmetic always builds new elements.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: dict[Key, Fraction]):
        self.algebra = algebra
        self.terms = terms

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise ContextMismatchError("elements belong to different algebras")
            return other
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Element":
        return (-self) + other

    def scale(self, c: ScalarLike) -> "Element":
        c = to_scalar(c)
        if not c:
            return self.algebra.zero()
        return Element(self.algebra, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        out = self.algebra.one()
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            exponent >>= 1
            if exponent:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == self.algebra.scalar(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, k: Sequence[int], w: Sequence[int]) -> Fraction:
        return self.terms.get((tuple(k), tuple(w)), Fraction(0))

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        """Terms in canonical order: color vector, then one-line permutation."""
        return sorted(self.terms.items())

    def polynomial(self, coeffs: Sequence[ScalarLike]) -> "Element":
        """Evaluate sum_j coeffs[j] * self^j by Horner's rule."""
        out = self.algebra.zero()
        for c in reversed(coeffs):
            out = out * self + to_scalar(c)
        return out

    def to_dict(self) -> dict:
        return {
            "context": self.algebra.params.to_dict(),
            "terms": [
                {"k": list(k), "w": list(w), "c": format_scalar(c)} for (k, w), c in self.sorted_terms()
            ],
        }

    def __repr__(self) -> str:
        from .expr import format_element

        return f"<Element {format_element(self)}>"


@lru_cache(maxsize=64)
def algebra_for(params: ParameterSet) -> Algebra:
    return Algebra(params)


def element_from_dict(data: dict) -> Element:
    from .errors import BadShapeError

    alg = algebra_for(ParameterSet.from_dict(data["context"]))
    terms: dict[Key, Fraction] = defaultdict(Fraction)
    for entry in data["terms"]:
        try:
            k, w, c = entry["k"], entry["w"], entry["c"]
        except KeyError as exc:
            raise BadShapeError(f"term is missing key {exc}") from None
        k = alg._check_color(k)
        w = alg._check_perm(w)
        terms[(k, w)] += to_scalar(c)
    return alg.element(terms)


# Functional surface mirroring the element methods.

AlgebraLike = Union[Algebra, ParameterSet]


def _alg(P: AlgebraLike) -> Algebra:
    return P if isinstance(P, Algebra) else algebra_for(P)


def zero(P: AlgebraLike) -> Element:
    return _alg(P).zero()


def one(P: AlgebraLike) -> Element:
    return _alg(P).one()


def add(x: Element, y: Element) -> Element:
    return x + y


def negate(x: Element) -> Element:
    return -x


def scale(c: ScalarLike, x: Element) -> Element:
    return x.scale(c)


def equals(x: Element, y: Element) -> bool:
    if x.algebra != y.algebra:
        raise ContextMismatchError("elements belong to different algebras")
    return x.terms == y.terms


def multiply(x: Element, y: Element) -> Element:
    return x.algebra.multiply(x, y)


def generator(P: AlgebraLike, name: str, *indices) -> Element:
    return _alg(P).generator(name, *indices)


def g_word(P: AlgebraLike, w: Sequence[int]) -> Element:
    return _alg(P).g_word(w)


def g_generator_inverse(P: AlgebraLike, i: int) -> Element:
    return _alg(P).g_inverse(i)


def sigma_action(sigma: Sequence[int], x: Element) -> Element:
    return x.algebra.sigma_action(sigma, x)
