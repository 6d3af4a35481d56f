"""Differential forms and multivector fields on R^{2n+1} with polynomial coefficients.

Both kinds store components over strictly increasing index tuples.  The
pairing between a k-form and a k-vector is the determinant pairing, so
``pair(dx_I, D_J)`` is 1 when I == J and 0 otherwise.

The Schouten bracket follows the convention in which ``[u, .]`` is a left
graded derivation of degree |u|-1,

    [u, v^w] = [u, v]^w + (-1)^((|u|+1)|v|) v^[u, w],
    [u, v]   = -(-1)^((|u|-1)(|v|-1)) [v, u],

and which restricts to the Lie bracket on vector fields and to X(f) on a
vector field and a function.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .coeff import DimensionError, GaussRational, Poly, to_scalar

Index = Tuple[int, ...]


class KindError(TypeError):
    """Raised when forms and multivectors are mixed in a product."""


class DegreeError(ValueError):
    pass


def merge_sign(a: Index, b: Index):
    """Sign and sorted union of a+b, or (0, None) if they share an index."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    sa = set(a)
    if any(j in sa for j in b):
        return 0, None
    # count inversions between the two increasing runs
    inv = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inv += j
    return (-1 if inv & 1 else 1), tuple(sorted(a + b))


def sort_sign(idx: Iterable[int]):
    """Sign of the permutation sorting ``idx``; (0, None) on a repeat."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    arr = idx[:]
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


class _Graded:
    _basis_name = "?"

    __slots__ = ("n", "degree", "comps")

    def __init__(self, n: int, degree: int, comps=()):
        if degree < 0:
            raise DegreeError("degree must be non-negative")
        self.n = n
        self.degree = degree
        dim = 2 * n + 1
        out: Dict[Index, Poly] = {}
        items = comps.items() if hasattr(comps, "items") else comps
        for idx, c in items:
            sign, key = sort_sign(idx)
            if len(idx) != degree:
                raise DegreeError(f"index {tuple(idx)} does not have length {degree}")
            if key and not all(0 <= k < dim for k in key):
                raise DimensionError(f"index {tuple(idx)} out of range for n={n}")
            if sign == 0:
                continue
            if not isinstance(c, Poly):
                c = Poly.const(n, c)
            elif c.n != n:
                raise DimensionError("coefficient dimension mismatch")
            prev = out.get(key)
            c = c if sign == 1 else -c
            out[key] = c if prev is None else prev + c
        self.comps = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, n, degree, comps):
        obj = object.__new__(cls)
        obj.n = n
        obj.degree = degree
        obj.comps = comps
        return obj

    @classmethod
    def zero(cls, n: int, degree: int = 0):
        return cls._raw(n, degree, {})

    @classmethod
    def one(cls, n: int):
        return cls._raw(n, 0, {(): Poly.const(n, 1)})

    @classmethod
    def scalar(cls, p: Poly):
        return cls._raw(p.n, 0, {(): p} if p else {})

    @classmethod
    def basis(cls, n: int, *idx: int):
        return cls(n, len(idx), {tuple(idx): Poly.const(n, 1)})

    def is_zero(self) -> bool:
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def _check(self, other):
        if type(other) is not type(self):
            raise KindError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        if isinstance(other, (Poly, int, Fraction, GaussRational)):
            other = type(self).scalar(other if isinstance(other, Poly) else Poly.const(self.n, other))
        self._check(other)
        if not other.comps:
            return self
        if not self.comps:
            return other
        if other.degree != self.degree:
            raise DegreeError(f"cannot add degree {self.degree} and degree {other.degree}")
        out = dict(self.comps)
        for k, v in other.comps.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(self.n, self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.n, self.degree, {k: -v for k, v in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, f) -> "_Graded":
        """Multiply every coefficient by a polynomial or scalar."""
        if not isinstance(f, Poly):
            c = to_scalar(f)
            if not c:
                return type(self).zero(self.n, self.degree)
            return type(self)._raw(self.n, self.degree, {k: v.scale(c) for k, v in self.comps.items()})
        if f.n != self.n:
            raise DimensionError("dimension mismatch")
        out = {}
        for k, v in self.comps.items():
            w = f * v
            if w:
                out[k] = w
        return type(self)._raw(self.n, self.degree, out)

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Fraction, GaussRational)):
            return self.scale(other)
        if isinstance(other, _Graded):
            if other.degree == 0 and type(other) is type(self):
                return self.scale(other.comps.get((), Poly.zero(self.n)))
            if self.degree == 0 and type(other) is type(self):
                return other.scale(self.comps.get((), Poly.zero(self.n)))
            raise KindError("'*' needs a scalar operand; use wedge for exterior products")
        return NotImplemented

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __rxor__(self, other):
        if isinstance(other, Poly):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (Poly, int, Fraction, GaussRational)):
            if isinstance(other, Poly):
                p = other
            else:
                p = Poly.const(self.n, other)
            if not p:
                return not self.comps
            return self.degree == 0 and self.comps == {(): p}
        if type(other) is not type(self):
            return NotImplemented
        if self.n != other.n or self.comps != other.comps:
            return False
        return not self.comps or self.degree == other.degree

    def __hash__(self):
        return hash((type(self).__name__, self.n, frozenset(self.comps.items())))

    def coeff(self, *idx: int) -> Poly:
        sign, key = sort_sign(idx)
        if sign == 0:
            return Poly.zero(self.n)
        c = self.comps.get(key, Poly.zero(self.n))
        return c if sign == 1 else -c

    def partial(self, i: int):
        """Coefficientwise partial derivative."""
        out = {}
        for k, v in self.comps.items():
            w = v.partial(i)
            if w:
                out[k] = w
        return type(self)._raw(self.n, self.degree, out)

    def map_coeffs(self, fn):
        out = {}
        for k, v in self.comps.items():
            w = fn(v)
            if w:
                out[k] = w
        return type(self)._raw(self.n, self.degree, out)

    def has_index(self, i: int) -> bool:
        return any(i in k for k in self.comps)

    def drop_index(self, i: int):
        """Discard every term containing basis element i."""
        return type(self)._raw(self.n, self.degree, {k: v for k, v in self.comps.items() if i not in k})

    def __str__(self):
        from .expr import format_value

        return format_value(self)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, deg={self.degree}, {self})"


class Form(_Graded):
    """A homogeneous differential form."""

    _basis_name = "dx"
    __slots__ = ()


class MultiVec(_Graded):
    """A homogeneous multivector field."""

    _basis_name = "Dx"
    __slots__ = ()


def dx(n: int, *idx: int) -> Form:
    return Form.basis(n, *idx)


def Dx(n: int, *idx: int) -> MultiVec:
    return MultiVec.basis(n, *idx)


def wedge(a, b):
    """Exterior product of two forms or two multivectors."""
    if isinstance(a, Poly) and isinstance(b, Poly):
        return a * b
    if isinstance(a, Poly):
        return b.scale(a)
    if isinstance(b, Poly):
        return a.scale(b)
    a._check(b)
    deg = a.degree + b.degree
    out: Dict[Index, Poly] = {}
    if deg <= 2 * a.n + 1:
        for ka, va in a.comps.items():
            for kb, vb in b.comps.items():
                sign, key = merge_sign(ka, kb)
                if not sign:
                    continue
                term = va * vb
                if sign < 0:
                    term = -term
                prev = out.get(key)
                out[key] = term if prev is None else prev + term
    return type(a)._raw(a.n, deg, {k: v for k, v in out.items() if v})


def wedge_power(a, k: int):
    out = type(a).one(a.n)
    for _ in range(k):
        out = wedge(out, a)
    return out


def _as_form(x, n=None) -> Form:
    if isinstance(x, Form):
        return x
    if isinstance(x, Poly):
        return Form.scalar(x)
    raise KindError(f"expected a form, got {type(x).__name__}")


def _as_multivec(x) -> MultiVec:
    if isinstance(x, MultiVec):
        return x
    if isinstance(x, Poly):
        return MultiVec.scalar(x)
    raise KindError(f"expected a multivector, got {type(x).__name__}")


def pair(beta, w) -> Poly:
    """Full contraction of a k-form with a k-vector (determinant convention)."""
    if isinstance(beta, Poly) and isinstance(w, Poly):
        return beta * w
    beta = _as_form(beta)
    w = _as_multivec(w)
    if beta.n != w.n:
        raise DimensionError("dimension mismatch")
    if beta.comps and w.comps and beta.degree != w.degree:
        raise DegreeError(f"cannot pair a {beta.degree}-form with a {w.degree}-vector")
    total = Poly.zero(beta.n)
    for k, v in beta.comps.items():
        c = w.comps.get(k)
        if c is not None:
            total = total + v * c
    return total


def contract_tilde(w, beta) -> MultiVec:
    """The (m-k)-vector W with pair(lam, W) == pair(beta ^ lam, w) for all lam."""
    w = _as_multivec(w)
    beta = _as_form(beta)
    if w.n != beta.n:
        raise DimensionError("dimension mismatch")
    if beta.degree > w.degree:
        raise DegreeError(f"cannot contract a {w.degree}-vector with a {beta.degree}-form")
    out: Dict[Index, Poly] = {}
    for kw, vw in w.comps.items():
        sw = set(kw)
        for kb, vb in beta.comps.items():
            if not sw.issuperset(kb):
                continue
            rest = tuple(j for j in kw if j not in kb)
            sign, _ = merge_sign(kb, rest)
            term = vb * vw
            if sign < 0:
                term = -term
            prev = out.get(rest)
            out[rest] = term if prev is None else prev + term
    return MultiVec._raw(w.n, w.degree - beta.degree, {k: v for k, v in out.items() if v})


def d(theta) -> Form:
    """Exterior derivative."""
    theta = _as_form(theta)
    n = theta.n
    out: Dict[Index, Poly] = {}
    for k, v in theta.comps.items():
        for j in range(2 * n + 1):
            if j in k:
                continue
            pj = v.partial(j)
            if not pj:
                continue
            sign, key = merge_sign((j,), k)
            if sign < 0:
                pj = -pj
            prev = out.get(key)
            out[key] = pj if prev is None else prev + pj
    return Form._raw(n, theta.degree + 1, {k: v for k, v in out.items() if v})


def _vector_components(X) -> Dict[int, Poly]:
    X = _as_multivec(X)
    if X.comps and X.degree != 1:
        raise DegreeError("expected a vector field")
    return {k[0]: v for k, v in X.comps.items()}


def interior(X, theta) -> Form:
    """Interior product i_X theta; an antiderivation of degree -1."""
    theta = _as_form(theta)
    xs = _vector_components(X)
    if theta.degree == 0:
        return Form.zero(theta.n, 0)
    out: Dict[Index, Poly] = {}
    for k, v in theta.comps.items():
        for a, j in enumerate(k):
            xj = xs.get(j)
            if xj is None:
                continue
            term = xj * v
            if a & 1:
                term = -term
            key = k[:a] + k[a + 1:]
            prev = out.get(key)
            out[key] = term if prev is None else prev + term
    return Form._raw(theta.n, theta.degree - 1, {k: v for k, v in out.items() if v})


def apply_vector(X, f: Poly) -> Poly:
    """The derivative X(f)."""
    total = Poly.zero(f.n)
    for j, c in _vector_components(X).items():
        pj = f.partial(j)
        if pj:
            total = total + c * pj
    return total


def lie_form(X, theta) -> Form:
    """Lie derivative via Cartan's formula i_X d + d i_X."""
    theta = _as_form(theta)
    first = interior(X, d(theta))
    if theta.degree == 0:
        return first
    return first + d(interior(X, theta))


def odd_derivative(w: MultiVec, i: int) -> MultiVec:
    """Right derivative of w with respect to the odd generator for D_i."""
    m = w.degree
    out = {}
    for k, v in w.comps.items():
        if i not in k:
            continue
        a = k.index(i)
        key = k[:a] + k[a + 1:]
        out[key] = v if (m - 1 - a) % 2 == 0 else -v
    return MultiVec._raw(w.n, max(m - 1, 0), out)


def schouten(u, v) -> MultiVec:
    """Schouten-Nijenhuis bracket of multivector fields."""
    u = _as_multivec(u)
    v = _as_multivec(v)
    u._check(v)
    p, q = u.degree, v.degree
    deg = p + q - 1
    if deg < 0:
        return MultiVec.zero(u.n, 0)
    sign = -1 if ((p - 1) * (q - 1)) % 2 == 0 else 1
    total = MultiVec.zero(u.n, deg)
    for i in range(2 * u.n + 1):
        if p > 0 and u.has_index(i):
            dv = v.partial(i)
            if dv:
                total = total + wedge(odd_derivative(u, i), dv)
        if q > 0 and v.has_index(i):
            du = u.partial(i)
            if du:
                t = wedge(odd_derivative(v, i), du)
                total = total + (t if sign > 0 else -t)
    if not total.comps:
        return MultiVec.zero(u.n, deg)
    return total


def lie_multivec(X, w) -> MultiVec:
    """Lie derivative of a multivector along a vector field."""
    return schouten(X, w)


def flat(omega2, w) -> Form:
    """The algebra map induced by omega~(u)(v) = omega(u, v)."""
    omega2 = _as_form(omega2)
    w = _as_multivec(w)
    if omega2.comps and omega2.degree != 2:
        raise DegreeError("flat needs a 2-form")
    n = w.n
    images = {j: interior(Dx(n, j), omega2) for j in range(2 * n + 1)}
    return _extend_multiplicative(w, images, Form)


def sharp(mu2, theta) -> MultiVec:
    """The algebra map induced by theta(mu~(gamma)) = (gamma ^ theta)(mu)."""
    mu2 = _as_multivec(mu2)
    theta = _as_form(theta)
    if mu2.comps and mu2.degree != 2:
        raise DegreeError("sharp needs a bivector")
    n = theta.n
    images = {j: contract_tilde(mu2, dx(n, j)) for j in range(2 * n + 1)}
    return _extend_multiplicative(theta, images, MultiVec)


def _extend_multiplicative(x, images, target):
    n = x.n
    total = target.zero(n, x.degree)
    cache = {(): target.one(n)}
    for k, v in x.comps.items():
        img = cache.get(k)
        if img is None:
            img = target.one(n)
            for j in k:
                img = wedge(img, images[j])
            cache[k] = img
        total = total + img.scale(v)
    if not total.comps:
        return target.zero(n, x.degree)
    return total


def evaluate(theta, *vectors) -> Poly:
    """theta(X1, ..., Xk) = pair(theta, X1 ^ ... ^ Xk)."""
    theta = _as_form(theta)
    w = MultiVec.one(theta.n)
    for X in vectors:
        w = wedge(w, _as_multivec(X))
    return pair(theta, w)


def koszul_d1(omega: Form, X, Y) -> Poly:
    """(d omega)(X, Y) for a 1-form via X(omega(Y)) - Y(omega(X)) - omega([X, Y])."""
    return (
        apply_vector(X, pair(omega, Y))
        - apply_vector(Y, pair(omega, X))
        - pair(omega, schouten(X, Y))
    )
