"""Prequantization operators o(f) acting on weight spaces p * E_h.

An operator is stored as a genuine first-order differential operator
zeroth + sum_i first[i] * d/dx_i on polynomials in x0..x_{2n}.  The weight
rule d/dx0 (p E_h) = ih p E_h is only used when acting on a WaveFn or when
an operator is reduced with ``on_weight``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .coeff import I, Poly
from .contact import ContactSpace, ham, poisson

INVERSE_IH = "inverse-ih"
TIMES_IH = "times-ih"
NORMALIZATIONS = (INVERSE_IH, TIMES_IH)


class PrequantError(ValueError):
    pass


def _check_h(h) -> Fraction:
    h = Fraction(h)
    if h == 0:
        raise PrequantError("h must be nonzero")
    return h


@dataclass(frozen=True)
class WaveFn:
    """p * E_h with p basic and E_h a formal symbol of weight ih under d/dx0."""

    h: Fraction
    p: Poly

    def __post_init__(self):
        object.__setattr__(self, "h", _check_h(self.h))
        if not self.p.is_basic():
            raise PrequantError(f"wave function amplitude {self.p} depends on x0")

    def __str__(self):
        return f"({self.p})*E_{self.h}"


@dataclass(frozen=True)
class PreqOp:
    n: int
    zeroth: Poly
    first: Tuple[Poly, ...]

    def __post_init__(self):
        if len(self.first) != 2 * self.n + 1:
            raise PrequantError("need one first-order coefficient per coordinate")

    @classmethod
    def zero(cls, n: int) -> "PreqOp":
        z = Poly.zero(n)
        return cls(n, z, (z,) * (2 * n + 1))

    @classmethod
    def multiplication(cls, f: Poly) -> "PreqOp":
        z = Poly.zero(f.n)
        return cls(f.n, f, (z,) * (2 * f.n + 1))

    @classmethod
    def identity(cls, n: int) -> "PreqOp":
        return cls.multiplication(Poly.const(n, 1))

    @classmethod
    def from_vector(cls, X) -> "PreqOp":
        n = X.n
        if X.degree != 1:
            raise PrequantError("expected a vector field")
        first = tuple(X.comps.get((i,), Poly.zero(n)) for i in range(2 * n + 1))
        return cls(n, Poly.zero(n), first)

    def _check(self, other: "PreqOp"):
        if not isinstance(other, PreqOp):
            raise TypeError(f"expected PreqOp, got {type(other).__name__}")
        if other.n != self.n:
            raise PrequantError(f"operators over different spaces (n={self.n}, n={other.n})")

    def __add__(self, other: "PreqOp") -> "PreqOp":
        self._check(other)
        return PreqOp(
            self.n,
            self.zeroth + other.zeroth,
            tuple(a + b for a, b in zip(self.first, other.first)),
        )

    def scale(self, c) -> "PreqOp":
        return PreqOp(self.n, self.zeroth.scale(c), tuple(a.scale(c) for a in self.first))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return self.zeroth.is_zero() and all(a.is_zero() for a in self.first)

    def derive(self, p: Poly) -> Poly:
        """The first-order part applied to a function (no weight rule)."""
        out = Poly.zero(self.n)
        for i, a in enumerate(self.first):
            if not a.is_zero():
                out = out + a * p.partial(i)
        return out

    def __call__(self, p: Poly) -> Poly:
        return self.zeroth * p + self.derive(p)

    def on_weight(self, h) -> "PreqOp":
        """Restriction to weight h: d/dx0 is replaced by multiplication by ih."""
        h = _check_h(h)
        ih = I * h
        z = Poly.zero(self.n)
        return PreqOp(self.n, self.zeroth + self.first[0].scale(ih), (z,) + self.first[1:])

    def __str__(self):
        parts = []
        if not self.zeroth.is_zero():
            parts.append(f"({self.zeroth})")
        for i, a in enumerate(self.first):
            if not a.is_zero():
                parts.append(f"({a})*d{i}")
        return " + ".join(parts) if parts else "0"


def compose_second_order(A: PreqOp, B: PreqOp):
    """Symmetric second-order coefficients of A o B, keyed by (i, j) with i <= j."""
    out = {}
    for i, a in enumerate(A.first):
        for j, b in enumerate(B.first):
            if a.is_zero() or b.is_zero():
                continue
            key = (min(i, j), max(i, j))
            out[key] = out.get(key, Poly.zero(A.n)) + a * b
    return {k: v for k, v in out.items() if not v.is_zero()}


def commutator(A: PreqOp, B: PreqOp) -> PreqOp:
    """AB - BA; the second-order parts are checked to cancel."""
    A._check(B)
    ab = compose_second_order(A, B)
    ba = compose_second_order(B, A)
    keys = set(ab) | set(ba)
    z = Poly.zero(A.n)
    if any(ab.get(k, z) != ba.get(k, z) for k in keys):
        raise ArithmeticError("second-order terms of a commutator did not cancel")
    zeroth = A.derive(B.zeroth) - B.derive(A.zeroth)
    first = tuple(A.derive(b) - B.derive(a) for a, b in zip(A.first, B.first))
    return PreqOp(A.n, zeroth, first)


def apply(A: PreqOp, phi: WaveFn) -> WaveFn:
    if A.n != phi.p.n:
        raise PrequantError("operator and wave function live over different spaces")
    p = A.on_weight(phi.h)(phi.p)
    if not p.is_basic():
        raise PrequantError("operator produced x0-dependence on a weight space")
    return WaveFn(phi.h, p)


def lift_factor(h, normalization: str = INVERSE_IH):
    h = _check_h(h)
    if normalization == INVERSE_IH:
        return 1 / (I * h)
    if normalization == TIMES_IH:
        return I * h
    raise PrequantError(f"unknown normalization {normalization!r}; use one of {NORMALIZATIONS}")


def lift(cs: ContactSpace, f: Poly, h, normalization: str = INVERSE_IH) -> PreqOp:
    """c * (f*d0 + ham(f)) with c = 1/(ih) or ih."""
    if not f.is_basic():
        raise PrequantError(f"{f} is not basic")
    c = lift_factor(h, normalization)
    op = PreqOp.from_vector(ham(cs, f))
    first = list(op.first)
    first[0] = first[0] + f
    return PreqOp(cs.n, op.zeroth, tuple(first)).scale(c)


def bracket_rescale(h, normalization: str = INVERSE_IH):
    """The factor k with k [o(f), o(g)] = o({f, g})."""
    return 1 / lift_factor(h, normalization)


def homomorphism_defect(cs: ContactSpace, f: Poly, g: Poly, h, normalization: str = INVERSE_IH) -> PreqOp:
    of = lift(cs, f, h, normalization)
    og = lift(cs, g, h, normalization)
    k = bracket_rescale(h, normalization)
    return commutator(of, og).scale(k) - lift(cs, poisson(cs, f, g), h, normalization)
