"""Exact sparse polynomials in x0..x_{2n} over Q and Q(i)."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]


class GaussRational:
    """A Gaussian rational re + im*i with exact Fraction parts.

    Use :func:`gauss` to build values: it returns a plain ``Fraction`` when
    the imaginary part vanishes, so real arithmetic never pays for this class.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return gauss(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return gauss(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return gauss(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        c, d = o
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        return gauss((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return GaussRational(*o) / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return self.re == o[0] and self.im == o[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"


Scalar = Union[Fraction, GaussRational]

I = GaussRational(0, 1)


def gauss(re, im=0) -> Scalar:
    """Canonical scalar: a Fraction if real, otherwise a GaussRational."""
    im = Fraction(im)
    if im == 0:
        return Fraction(re)
    return GaussRational(re, im)


def to_scalar(c) -> Scalar:
    if isinstance(c, GaussRational):
        return gauss(c.re, c.im)
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class DimensionError(ValueError):
    pass


class Poly:
    """Sparse polynomial in the coordinates x0..x_{2n}.

    ``terms`` maps exponent tuples of length 2n+1 to nonzero exact scalars.
    Instances are immutable and hashable.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, object] = ()):
        if n < 0:
            raise DimensionError("half-dimension must be non-negative")
        self.n = n
        nv = 2 * n + 1
        clean: Dict[Exponent, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != nv or any(k < 0 for k in e):
                raise DimensionError(f"bad exponent vector {e} for n={n}")
            c = to_scalar(c)
            if c:
                clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Scalar]) -> "Poly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, c=1) -> "Poly":
        c = to_scalar(c)
        return cls._raw(n, {(0,) * (2 * n + 1): c} if c else {})

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        nv = 2 * n + 1
        if not 0 <= i < nv:
            raise DimensionError(f"coordinate x{i} out of range for n={n}")
        e = [0] * nv
        e[i] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    @property
    def nvars(self) -> int:
        return 2 * self.n + 1

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise DimensionError(f"dimension mismatch: n={self.n} vs n={other.n}")
            return other
        if isinstance(other, (int, Fraction, GaussRational)):
            return Poly.const(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = to_scalar(c)
        if not c:
            return Poly.zero(self.n)
        return Poly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: n={self.n} vs n={other.n}")
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a non-negative integer")
        out = Poly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussRational)):
            c = to_scalar(other)
            if not c:
                return not self.terms
            return self.terms == {(0,) * self.nvars: c}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # calculus

    def partial(self, i: int) -> "Poly":
        if not 0 <= i < self.nvars:
            raise DimensionError(f"coordinate index {i} out of range for n={self.n}")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Poly._raw(self.n, out)

    def is_basic(self) -> bool:
        """True iff the polynomial does not depend on x0."""
        return all(e[0] == 0 for e in self.terms)

    def eval(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise DimensionError(f"point has length {len(point)}, expected {self.nvars}")
        pt = [to_scalar(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * x ** k if isinstance(x, Fraction) else v * _ipow(x, k)
            total = total + v
        return total

    def conjugate(self) -> "Poly":
        return Poly._raw(
            self.n,
            {e: (c.conjugate() if isinstance(c, GaussRational) else c) for e, c in self.terms.items()},
        )

    def is_real(self) -> bool:
        return all(not isinstance(c, GaussRational) for c in self.terms.values())

    # printing

    def sorted_terms(self) -> Iterable[Tuple[Exponent, Scalar]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        from .expr import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly(n={self.n}, {self})"


def _ipow(x, k):
    out = Fraction(1)
    for _ in range(k):
        out = out * x
    return out


def monomial(n: int, exps: Sequence[int], coeff=1) -> Poly:
    return Poly(n, {tuple(exps): coeff})


def variables(n: int) -> Tuple[Poly, ...]:
    return tuple(Poly.var(n, i) for i in range(2 * n + 1))
