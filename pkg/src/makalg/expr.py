"""
Text expressions for algebra elements.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := 't' uint | 'T' uint | 'g' uint | 'e' uint
              | 'b[' uint (',' uint)* ']' | rational | '(' expr ')'
    rational := '-'? uint ('/' uint)?

Whitespace is ignored.  Expressions are evaluated directly in the engine.
"""

from __future__ import annotations

from fractions import Fraction

from . import combinatorics as comb
from .algebra import AlgebraLike, Element, _alg
from .bases import to_coordinates
from .errors import BadLabelError, ExpressionSyntaxError
from .scalars import format_scalar


class _Parser:
    def __init__(self, text: str, A):
        self.text = text
        self.pos = 0
        self.A = A

    def error(self, message: str, pos: int | None = None):
        return ExpressionSyntaxError(message, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def parse(self) -> Element:
        value = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> Element:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Element:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> Element:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            value = value ** self.uint()
        return value

    def atom(self) -> Element:
        ch = self.peek()
        start = self.pos
        A = self.A
        if ch in ("t", "T", "g", "e"):
            self.pos += 1
            return A.generator(ch, self.uint())
        if ch == "b":
            self.pos += 1
            self.expect("[")
            k = [self.uint()]
            while self.peek() == ",":
                self.pos += 1
                k.append(self.uint())
            self.expect("]")
            return A.b(k)
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch == "-" or ch.isdigit():
            negative = ch == "-"
            if negative:
                self.pos += 1
                if not self.peek().isdigit():
                    raise self.error("a leading '-' must start a rational literal")
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.uint()
                if den == 0:
                    raise self.error("zero denominator", start)
            value = Fraction(-num if negative else num, den)
            return A.scalar(value)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {ch!r}")


def parse_element(text: str, P: AlgebraLike) -> Element:
    """Evaluate ``text`` in the algebra with parameters ``P``.

    >>> from makalg.scalars import validate_parameters
    >>> P = validate_parameters(2, 2, 2, [1, -1])
    >>> parse_element("b[1,2] + b[2,1] + b[1,1] + b[2,2]", P) == 1
    True
    """
    return _Parser(text, _alg(P)).parse()


def _word_factors(letter: str, w) -> list[str]:
    return [f"{letter}{i}" for i in comb.reduced_word(w)]


def _monomial_factors(c) -> list[str]:
    return [f"t{i}" if e == 1 else f"t{i}^{e}" for i, e in enumerate(c, start=1) if e]


def _join(terms: list[tuple[Fraction, list[str]]]) -> str:
    if not terms:
        return "0"
    pieces = []
    for index, (coeff, factors) in enumerate(terms):
        if index == 0:
            magnitude = coeff
        else:
            pieces.append(" - " if coeff < 0 else " + ")
            magnitude = abs(coeff)
        if not factors:
            pieces.append(format_scalar(magnitude))
        elif magnitude == 1:
            pieces.append("*".join(factors))
        else:
            pieces.append("*".join([format_scalar(magnitude)] + factors))
    return "".join(pieces)


def format_element(x: Element, basis: str = "bg") -> str:
    """Deterministic text for ``x`` in the given basis, readable by :func:`parse_element`.

    >>> from makalg.scalars import validate_parameters
    >>> from makalg.algebra import algebra_for
    >>> format_element(algebra_for(validate_parameters(1, 2, 2, [1, -1])).one())
    'b[1] + b[2]'
    """
    if basis == "bg":
        terms = [
            (c, [f"b[{','.join(map(str, k))}]"] + _word_factors("g", w)) for (k, w), c in x.sorted_terms()
        ]
    elif basis in ("tg", "tT"):
        letter = "g" if basis == "tg" else "T"
        coords = to_coordinates(x, basis)
        terms = [(c, _monomial_factors(a) + _word_factors(letter, w)) for (a, w), c in coords.sorted_entries()]
    else:
        raise BadLabelError(f"unknown basis {basis!r}")
    return _join(terms)
