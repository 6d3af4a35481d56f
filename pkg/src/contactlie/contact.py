"""The canonical contact structure on R^{2n+1} and its Poisson calculus.

Coordinates are Darboux coordinates x0..x_{2n}, with contact form
alpha = dx0 + sum x_{2i-1} dx_{2i}.  Basic functions are the polynomials
that do not depend on x0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .coeff import Poly
from .exterior import (
    DegreeError,
    Dx,
    Form,
    MultiVec,
    apply_vector,
    contract_tilde,
    d,
    dx,
    flat,
    interior,
    lie_form,
    pair,
    schouten,
    sharp,
    wedge,
    wedge_power,
)


class ContactError(ValueError):
    pass


@dataclass(frozen=True)
class ContactSpace:
    n: int
    alpha: Form
    omega: Form
    eta: MultiVec
    mu: MultiVec

    @cached_property
    def volume(self) -> Form:
        """alpha ^ omega^n."""
        return wedge(self.alpha, wedge_power(self.omega, self.n))

    def x(self, i: int) -> Poly:
        return Poly.var(self.n, i)

    def check(self) -> None:
        """Raise ContactError unless every structural identity holds."""
        one = Poly.const(self.n, 1)
        checks = [
            ("omega == d(alpha)", self.omega == d(self.alpha)),
            ("i_eta alpha == 1", interior(self.eta, self.alpha) == one),
            ("i_eta omega == 0", interior(self.eta, self.omega).is_zero()),
            ("flat(omega, mu) == omega", flat(self.omega, self.mu) == self.omega),
            ("mu in wedge^2 ker(alpha)", contract_tilde(self.mu, self.alpha).is_zero()),
            ("alpha ^ omega^n != 0", not self.volume.is_zero()),
        ]
        bad = [name for name, ok in checks if not ok]
        if bad:
            raise ContactError("contact structure invariants violated: " + ", ".join(bad))


def make_contact(n: int) -> ContactSpace:
    if n < 1:
        raise ContactError("n must be at least 1")
    alpha = dx(n, 0)
    mu = MultiVec.zero(n, 2)
    for i in range(1, n + 1):
        xo = Poly.var(n, 2 * i - 1)
        alpha = alpha + dx(n, 2 * i).scale(xo)
        mu = mu + wedge(Dx(n, 2 * i - 1), Dx(n, 2 * i) - Dx(n, 0).scale(xo))
    space = ContactSpace(n=n, alpha=alpha, omega=d(alpha), eta=Dx(n, 0), mu=mu)
    space.check()
    return space


def _df(f: Poly) -> Form:
    return d(Form.scalar(f))


def poisson(cs: ContactSpace, f: Poly, g: Poly) -> Poly:
    """{f, g} = (df ^ dg)(mu)."""
    return pair(wedge(_df(f), _df(g)), cs.mu)


def jacobiator(cs: ContactSpace, f: Poly, g: Poly, h: Poly) -> Poly:
    """{{f,g},h} + {{g,h},f} + {{h,f},g}."""
    pb = lambda a, b: poisson(cs, a, b)
    return pb(pb(f, g), h) + pb(pb(g, h), f) + pb(pb(h, f), g)


def jacobiator_rhs(cs: ContactSpace, f: Poly, g: Poly, h: Poly) -> Poly:
    """(1/2) (df ^ dg ^ dh)([mu, mu])."""
    three = wedge(wedge(_df(f), _df(g)), _df(h))
    return pair(three, mu_mu(cs)).scale(Fraction(1, 2))


def mu_mu(cs: ContactSpace) -> MultiVec:
    return schouten(cs.mu, cs.mu)


def ham(cs: ContactSpace, f: Poly) -> MultiVec:
    """The horizontal field mu~(df)."""
    return sharp(cs.mu, _df(f))


def hat(cs: ContactSpace, f: Poly) -> MultiVec:
    """The contact lift f*eta + mu~(df)."""
    return cs.eta.scale(f) + ham(cs, f)


def alpha_of(cs: ContactSpace, X: MultiVec) -> Poly:
    return pair(cs.alpha, X)


@dataclass(frozen=True)
class ContactClass:
    """Classification of a vector field by its Lie derivative of alpha.

    ``kind`` is one of "automorphism", "transformation" or "none";
    ``multiplier`` is phi in L_X alpha = phi * alpha for the first two.
    """

    kind: str
    multiplier: Optional[Poly] = None


def contact_class(cs: ContactSpace, X: MultiVec) -> ContactClass:
    lx = lie_form(X, cs.alpha)
    if lx.is_zero():
        return ContactClass("automorphism", Poly.zero(cs.n))
    phi = interior(cs.eta, lx).comps.get((), Poly.zero(cs.n))
    if (lx - cs.alpha.scale(phi)).is_zero():
        return ContactClass("transformation", phi)
    return ContactClass("none")


def is_invariant(cs: ContactSpace, w) -> bool:
    """True iff [eta, w] = 0."""
    if isinstance(w, Poly):
        return w.is_basic()
    return schouten(cs.eta, w).is_zero()


@dataclass(frozen=True)
class BasicClass:
    """A class in invariant multivectors modulo eta ^ (invariant multivectors).

    ``rep`` is the unique representative with no D0 factor.
    """

    rep: MultiVec

    @property
    def degree(self) -> int:
        return self.rep.degree

    def is_zero(self) -> bool:
        return self.rep.is_zero()


def basic_normal_form(cs: ContactSpace, w) -> BasicClass:
    if isinstance(w, Poly):
        w = MultiVec.scalar(w)
    if not is_invariant(cs, w):
        raise ContactError(f"multivector {w} is not invariant ([eta, w] != 0)")
    return BasicClass(w.drop_index(0))


def delta_mu(cs: ContactSpace, c: BasicClass) -> BasicClass:
    """The induced coboundary [mu, .] on basic classes."""
    return basic_normal_form(cs, schouten(cs.mu, c.rep))


def iso_to_basic_forms(cs: ContactSpace, c: BasicClass) -> Form:
    return flat(cs.omega, c.rep)


def iso_inverse(cs: ContactSpace, theta: Form) -> BasicClass:
    """Inverse of iso_to_basic_forms on basic forms.

    On degree k this is (-1)^k times the class of mu~ applied multiplicatively,
    because flat(omega, mu~(gamma)) = -gamma for basic 1-forms gamma.
    """
    if not is_basic_form(cs, theta):
        raise ContactError("form is not basic")
    w = sharp(cs.mu, theta)
    if theta.degree % 2:
        w = -w
    return basic_normal_form(cs, w)


def is_basic_form(cs: ContactSpace, theta) -> bool:
    if isinstance(theta, Poly):
        return theta.is_basic()
    return interior(cs.eta, theta).is_zero() and lie_form(cs.eta, theta).is_zero()


def volume_identities(cs: ContactSpace, f: Poly, X: MultiVec):
    """(L_X V, X(f) V - d(i_X(f V))) for V = alpha ^ omega^n; both vanish."""
    if contact_class(cs, X).kind != "automorphism":
        raise ContactError("volume identities need an infinitesimal contact automorphism")
    V = cs.volume
    lie_v = lie_form(X, V)
    defect = V.scale(apply_vector(X, f)) - d(interior(X, V.scale(f)))
    return lie_v, defect


def two_form_on(cs: ContactSpace, theta: Form, X: MultiVec, Y: MultiVec) -> Poly:
    """theta(X, Y) for a 2-form."""
    if theta.degree != 2:
        raise DegreeError("expected a 2-form")
    return pair(theta, wedge(X, Y))
