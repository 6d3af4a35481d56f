"""Canonical printing and parsing of polynomials, forms and multivectors.

Grammar (lowest to highest precedence)::

    expr   := prod (('+' | '-') prod)*
    prod   := unary (('*' | '^') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('**' INT)?
    atom   := RATIONAL | 'i' | 'x'K | 'dx'K | 'Dx'K | '(' expr ')'

``^`` is the wedge product and ``**`` an integer power of a scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .coeff import GaussRational, I, Poly
from .exterior import DegreeError, Form, KindError, MultiVec, _Graded, wedge

Value = Union[Poly, Form, MultiVec]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# formatting


def _format_rational(q: Fraction) -> str:
    return str(q)


def _coeff_parts(c):
    """Split a scalar into (negative, magnitude string); '1' marks a unit."""
    if isinstance(c, GaussRational):
        if c.re == 0:
            mag = "i" if abs(c.im) == 1 else f"{abs(c.im)}*i"
            return c.im < 0, mag
        op = "+" if c.im > 0 else "-"
        im = "i" if abs(c.im) == 1 else f"{abs(c.im)}*i"
        return False, f"({c.re}{op}{im})"
    return c < 0, _format_rational(abs(c))


def _monomial(exps) -> str:
    parts = []
    for i, k in enumerate(exps):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}**{k}")
    return "*".join(parts)


def _signed_terms(p: Poly):
    for e, c in p.sorted_terms():
        neg, mag = _coeff_parts(c)
        mono = _monomial(e)
        if not mono:
            yield neg, mag
        elif mag == "1":
            yield neg, mono
        else:
            yield neg, f"{mag}*{mono}"


def _join(signed) -> str:
    out = []
    for k, (neg, body) in enumerate(signed):
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_poly(p: Poly) -> str:
    return _join(list(_signed_terms(p)))


def format_value(v) -> str:
    if isinstance(v, Poly):
        return format_poly(v)
    if not isinstance(v, _Graded):
        return str(v)
    name = v._basis_name
    signed = []
    for key in sorted(v.comps):
        coef = v.comps[key]
        basis = "^".join(f"{name}{j}" for j in key)
        terms = list(_signed_terms(coef))
        if not basis:
            signed.extend(terms)
            continue
        if len(terms) == 1:
            neg, body = terms[0]
            signed.append((neg, basis if body == "1" else f"{body}*{basis}"))
        else:
            signed.append((False, f"({format_poly(coef)})*{basis}"))
    return _join(signed)


# parsing


@dataclass
class Token:
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>Dx\d+|dx\d+|x\d+|i(?![A-Za-z0-9]))"
    r"|(?P<op>\*\*|[-+*^()]))"
)


def tokenize(text: str) -> List[Token]:
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append(Token(m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = tokenize(text)
        self.k = 0
        self.n = n

    def peek(self) -> Token:
        return self.toks[self.k]

    def take(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.pos)
        return t

    def parse(self) -> Value:
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.text!r}", t.pos)
        return v

    def expr(self) -> Value:
        v = self.prod()
        while self.peek().text in ("+", "-"):
            op = self.take()
            w = self.prod()
            v = self._combine(op, v, w)
        return v

    def prod(self) -> Value:
        v = self.unary()
        while self.peek().text in ("*", "^"):
            op = self.take()
            w = self.unary()
            v = self._combine(op, v, w)
        return v

    def unary(self) -> Value:
        t = self.peek()
        if t.text == "-":
            self.take()
            return -self.unary()
        if t.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Value:
        base = self.atom()
        if self.peek().text == "**":
            op = self.take()
            t = self.take()
            if t.kind != "num" or "/" in t.text:
                raise ParseError("exponent must be a non-negative integer literal", t.pos)
            if not isinstance(base, Poly):
                raise ParseError("'**' applies to scalars only; use '^' for wedge", op.pos)
            return base ** int(t.text)
        return base

    def atom(self) -> Value:
        t = self.take()
        n = self.n
        if t.kind == "num":
            try:
                return Poly.const(n, Fraction(t.text))
            except ZeroDivisionError:
                raise ParseError("zero denominator", t.pos) from None
        if t.kind == "name":
            if t.text == "i":
                return Poly.const(n, I)
            if t.text.startswith("Dx"):
                return MultiVec.basis(n, self._index(t, t.text[2:]))
            if t.text.startswith("dx"):
                return Form.basis(n, self._index(t, t.text[2:]))
            return Poly.var(n, self._index(t, t.text[1:]))
        if t.text == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {t.text or 'end of input'!r}", t.pos)

    def _index(self, t: Token, digits: str) -> int:
        k = int(digits)
        if k > 2 * self.n:
            raise ParseError(f"index {k} out of range for n={self.n} (max {2 * self.n})", t.pos)
        return k

    def _combine(self, op: Token, a: Value, b: Value) -> Value:
        try:
            if op.text == "+":
                return _add(a, b)
            if op.text == "-":
                return _add(a, -b)
            if op.text == "*":
                if not isinstance(a, Poly) and not isinstance(b, Poly):
                    raise KindError("'*' needs a scalar operand; use '^' for wedge")
                if isinstance(a, Poly):
                    return b * a if not isinstance(b, Poly) else a * b
                return a * b
            return wedge(a, b)
        except KindError as e:
            raise ParseError(f"kind mismatch: {e}", op.pos) from None
        except DegreeError as e:
            raise ParseError(f"degree mismatch: {e}", op.pos) from None


def _add(a: Value, b: Value) -> Value:
    if isinstance(a, Poly) and isinstance(b, Poly):
        return a + b
    if isinstance(a, Poly):
        a, b = b, a
    if isinstance(b, Poly):
        return a + type(a).scalar(b)
    if type(a) is not type(b):
        raise KindError(f"cannot add {type(a).__name__} and {type(b).__name__}")
    return a + b


def parse(text: str, n: int) -> Value:
    """Parse an expression into a Poly, Form or MultiVec over R^{2n+1}."""
    return _Parser(text, n).parse()


def normalize(v: Value) -> Value:
    """Collapse degree-0 forms and multivectors to polynomials."""
    if isinstance(v, _Graded) and (v.degree == 0 or not v.comps):
        if not v.comps:
            return Poly.zero(v.n) if v.degree == 0 else v
        return v.comps[()]
    return v


def round_trips(v: Value) -> bool:
    """parse(format(v)) == v."""
    return parse(format_value(v), v.n) == v


def format_any(v: Optional[object]) -> str:
    return format_value(v)
