"""Seeded identity suites.  Every check is exact; a suite passes iff no
sample produced a nonzero defect.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from . import contact as ct
from . import liealg as la
from . import prequant as pq
from .coeff import GaussRational, Poly
from .exterior import (
    MultiVec,
    _Graded,
    contract_tilde,
    d,
    interior,
    koszul_d1,
    lie_form,
    pair,
    schouten,
    wedge,
    wedge_power,
)
from .expr import format_value, round_trips
from .sampling import (
    random_basic_form,
    random_coeff,
    random_form,
    random_multivec,
    random_poly,
)

MAX_DUMPS = 3
SUITES = ("coeff", "exterior", "contact", "liealg", "preq")


@dataclass
class Check:
    suite: str
    name: str
    samples: int = 0
    failures: List[Dict[str, str]] = field(default_factory=list)
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "samples": self.samples,
            "failed": self.failed,
            "counterexamples": self.failures,
        }


def _show(v) -> str:
    if isinstance(v, (Poly, _Graded)):
        return format_value(v)
    return str(v)


class Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: Dict[str, Check] = {}

    def check(self, name: str, ok: bool, **inputs) -> bool:
        c = self.checks.setdefault(name, Check(self.suite, name))
        c.samples += 1
        if not ok:
            c.failed += 1
            if len(c.failures) < MAX_DUMPS:
                c.failures.append({k: _show(v) for k, v in inputs.items()})
        return ok

    def values(self, *vals) -> None:
        """Parser round-trip on every value produced by the suite."""
        for v in vals:
            if isinstance(v, (Poly, _Graded)):
                self.check("parser round-trip", round_trips(v), value=v)

    def results(self) -> List[Check]:
        return list(self.checks.values())


# coeff


def _random_gauss(rng) -> GaussRational:
    return GaussRational(Fraction(random_coeff(rng, False), rng.randint(1, 3)), random_coeff(rng))


def suite_coeff(rng: random.Random, n: int, max_degree: int, samples: int) -> List[Check]:
    rec = Recorder("coeff")
    for _ in range(samples):
        p, q, r = (random_poly(rng, n, max_degree) for _ in range(3))
        rec.values(p, q, r)
        rec.check("commutative", p * q == q * p, p=p, q=q)
        rec.check("associative", (p * q) * r == p * (q * r), p=p, q=q, r=r)
        rec.check("distributive", p * (q + r) == p * q + p * r, p=p, q=q, r=r)
        rec.check("additive inverse", (p - p).is_zero(), p=p)
        i = rng.randrange(2 * n + 1)
        rec.check(
            "partial is a derivation",
            (p * q).partial(i) == p.partial(i) * q + p * q.partial(i),
            p=p, q=q, i=i,
        )
        pt = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2 * n + 1)]
        rec.check("evaluation is multiplicative", (p * q).eval(pt) == p.eval(pt) * q.eval(pt), p=p, q=q)
        a, b = _random_gauss(rng), _random_gauss(rng)
        rec.check("gaussian conjugation is multiplicative", (a * b).conjugate() == a.conjugate() * b.conjugate(), a=a, b=b)
        if b:
            rec.check("gaussian division inverts multiplication", (a / b) * b == a, a=a, b=b)
        pa = p.scale(a)
        rec.values(pa)
        rec.check("conjugate is an involution", pa.conjugate().conjugate() == pa, p=pa)
    return rec.results()


# exterior


def suite_exterior(rng: random.Random, n: int, max_degree: int, samples: int) -> List[Check]:
    rec = Recorder("exterior")
    top = 2 * n + 1
    for _ in range(samples):
        k = rng.randint(0, top - 1)
        a = random_form(rng, n, k, max_degree)
        b = random_form(rng, n, rng.randint(0, top - k), max_degree)
        rec.values(a, b)
        rec.check("d o d = 0", d(d(a)).is_zero(), a=a)
        lhs = d(wedge(a, b))
        rhs = wedge(d(a), b) + (wedge(a, d(b)) if k % 2 == 0 else -wedge(a, d(b)))
        rec.check("d is an antiderivation", lhs == rhs, a=a, b=b)

        X = random_multivec(rng, n, 1, max_degree)
        Y = random_multivec(rng, n, 1, max_degree)
        rec.values(X, Y)
        th = random_form(rng, n, rng.randint(1, min(3, top)), max_degree)
        lhs = lie_form(X, interior(Y, th)) - interior(Y, lie_form(X, th))
        rec.check("[L_X, i_Y] = i_[X,Y]", lhs == interior(schouten(X, Y), th), X=X, Y=Y, theta=th)
        one = random_form(rng, n, 1, max_degree)
        rec.check(
            "Koszul formula for d on 1-forms",
            koszul_d1(one, X, Y) == pair(d(one), wedge(X, Y)),
            omega=one, X=X, Y=Y,
        )

        p, q, r = (rng.randint(0, 2) for _ in range(3))
        u = random_multivec(rng, n, p, max_degree - 1)
        v = random_multivec(rng, n, q, max_degree - 1)
        w = random_multivec(rng, n, r, max_degree - 1)
        uv = schouten(u, v)
        rec.values(uv)
        sgn = -1 if ((p - 1) * (q - 1)) % 2 == 0 else 1
        rec.check("Schouten graded antisymmetry", uv == schouten(v, u).scale(sgn), u=u, v=v)
        lhs = schouten(u, wedge(v, w))
        tail = wedge(v, schouten(u, w))
        rhs = wedge(uv, w) + (tail if ((p + 1) * q) % 2 == 0 else -tail)
        rec.check("Schouten Leibniz rule", lhs == rhs, u=u, v=v, w=w)
        jac = MultiVec.zero(n, max(p + q + r - 2, 0))
        for (x, dx_), (y, dy), (z, dz) in ((
            (u, p), (v, q), (w, r)), ((v, q), (w, r), (u, p)), ((w, r), (u, p), (v, q))
        ):
            t = schouten(x, schouten(y, z))
            jac = jac + (t if ((dx_ - 1) * (dz - 1)) % 2 == 0 else -t)
        rec.check("Schouten graded Jacobi identity", jac.is_zero(), u=u, v=v, w=w)

        m = rng.randint(0, min(3, top))
        wv = random_multivec(rng, n, m, max_degree)
        j = rng.randint(0, m)
        beta = random_form(rng, n, j, max_degree)
        lam = random_form(rng, n, m - j, max_degree)
        rec.check(
            "contract_tilde defining property",
            pair(lam, contract_tilde(wv, beta)) == pair(wedge(beta, lam), wv),
            w=wv, beta=beta, lam=lam,
        )
    return rec.results()


# contact


def _jacobiator_sign_consistent(cs, f, g, h) -> bool:
    """Jac(f,g,h) + (1/2)(df^dg^dh)([mu,mu]) = 0, the sign fixed by the bracket convention."""
    return (ct.jacobiator(cs, f, g, h) + ct.jacobiator_rhs(cs, f, g, h)).is_zero()


def suite_contact(rng: random.Random, n: int, max_degree: int, samples: int) -> List[Check]:
    rec = Recorder("contact")
    cs = ct.make_contact(n)
    rec.values(cs.alpha, cs.omega, cs.eta, cs.mu)
    vol = cs.volume
    low = wedge(cs.alpha, wedge_power(cs.omega, n - 1))
    for _ in range(samples):
        f, g, h = (random_poly(rng, n, max_degree, basic=True) for _ in range(3))
        fg = ct.poisson(cs, f, g)
        rec.values(f, g, h, fg)
        rec.check("Poisson antisymmetry", fg == -ct.poisson(cs, g, f), f=f, g=g)
        rec.check(
            "Poisson Leibniz rule",
            ct.poisson(cs, f, g * h) == fg * h + g * ct.poisson(cs, f, h),
            f=f, g=g, h=h,
        )
        rec.check("Poisson Jacobi identity", ct.jacobiator(cs, f, g, h).is_zero(), f=f, g=g, h=h)
        rec.check("bracket of basic functions is basic", fg.is_basic(), f=f, g=g)
        hf, hg = ct.ham(cs, f), ct.ham(cs, g)
        rec.values(hf)
        rec.check("{f,g} = omega(ham f, ham g)", fg == pair(cs.omega, wedge(hf, hg)), f=f, g=g)
        lhs = vol.scale(fg)
        rhs = wedge(wedge(d(f), d(g)), low).scale(n)
        rec.check("{f,g} alpha^omega^n = n df^dg^alpha^omega^(n-1)", lhs == rhs, f=f, g=g)

        F, G, H = (random_poly(rng, n, max_degree) for _ in range(3))
        rec.check(
            "Jacobiator equals -(1/2)(df^dg^dh)([mu,mu])",
            _jacobiator_sign_consistent(cs, F, G, H),
            f=F, g=G, h=H,
        )
        hatF = ct.hat(cs, F)
        rec.values(hatF)
        eta_f = F.partial(0)
        rec.check("L_hat(f) alpha = eta(f) alpha", lie_form(hatF, cs.alpha) == cs.alpha.scale(eta_f), f=F)
        kind = ct.contact_class(cs, hatF).kind
        rec.check("hat(f) is an automorphism iff f is basic", (kind == "automorphism") == F.is_basic(), f=F)
        X, Y = ct.hat(cs, f), ct.hat(cs, g)
        XY = schouten(X, Y)
        rec.check("[hat f, hat g] = hat {f,g}", XY == ct.hat(cs, fg), f=f, g=g)
        rec.check(
            "alpha([X,Y]) = (d alpha)(X,Y) on automorphisms",
            ct.alpha_of(cs, XY) == pair(cs.omega, wedge(X, Y)),
            f=f, g=g,
        )

        k = rng.randint(0, 2 * n - 1)
        w = random_multivec(rng, n, k, max_degree, basic=True).drop_index(0) if k else MultiVec.scalar(h)
        c = ct.basic_normal_form(cs, w)
        rec.values(c.rep)
        dd = ct.delta_mu(cs, ct.delta_mu(cs, c))
        rec.check("delta_mu o delta_mu = 0", dd.is_zero(), w=w)
        kk = rng.randint(0, 2 * n)
        inv = random_multivec(rng, n, kk, max_degree, basic=True) if kk else MultiVec.scalar(h)
        cls = ct.basic_normal_form(cs, inv)
        lhs = d(ct.iso_to_basic_forms(cs, cls))
        rhs = ct.iso_to_basic_forms(cs, ct.delta_mu(cs, cls))
        rec.check("d o iso = iso o delta_mu", lhs == rhs, w=inv)
        bf = random_basic_form(rng, n, rng.randint(1, 2 * n), max_degree)
        back = ct.iso_to_basic_forms(cs, ct.iso_inverse(cs, bf))
        rec.check("iso o iso_inverse = id on basic forms", back == bf, theta=bf)

        p = random_poly(rng, n, max_degree, basic=True)
        lv, defect = ct.volume_identities(cs, p, X)
        rec.check("L_X (alpha^omega^n) = 0 for X = hat(basic)", lv.is_zero(), f=f)
        rec.check("X(p) V = d(i_X(p V))", defect.is_zero(), f=f, p=p)
    return rec.results()


# liealg


def _random_vec(rng, dim):
    return [Fraction(random_coeff(rng, False)) for _ in range(dim)]


def _random_cochain(rng, S, k):
    L = S.algebra
    comps = {idx: _random_vec(rng, S.rank) for idx in itertools.combinations(range(L.dim), k)}
    return la.Cochain(S, k, comps)


def _random_chain(rng, L, k):
    return la.Chain(L, k, {idx: random_coeff(rng, False) for idx in itertools.combinations(range(L.dim), k)})


def sample_algebras(rng: random.Random, count: int):
    yield "heis3", la.heis3()
    yield "sl2", la.sl2()
    for s in range(count):
        yield f"random4[{s}]", la.random_solvable(rng)


def suite_liealg(rng: random.Random, n: int, max_degree: int, samples: int) -> List[Check]:
    rec = Recorder("liealg")
    count = max(1, min(20, samples // 5))
    per = max(1, samples // (count + 2))
    for name, L in sample_algebras(rng, count):
        modules = [la.trivial_module(L), la.adjoint_module(L)]
        for _ in range(per):
            S = rng.choice(modules)
            k = rng.randint(0, L.dim - 1)
            w = _random_cochain(rng, S, k)
            rec.check("ce_d o ce_d = 0", la.ce_d(la.ce_d(w)).is_zero(), algebra=name, k=k)
            m = rng.randint(1, L.dim)
            u = _random_chain(rng, L, m)
            rec.check("boundary o boundary = 0", la.boundary(la.boundary(u)).is_zero(), algebra=name, u=u)
            x, y = _random_vec(rng, L.dim), _random_vec(rng, L.dim)
            cx, cy = la.Chain.from_vectors(L, x), la.Chain.from_vectors(L, y)
            rec.check(
                "chain bracket restricts to the Lie bracket",
                la.schouten_chain(cx, cy) == la.Chain.from_vectors(L, L.bracket(x, y)),
                algebra=name, x=x, y=y,
            )
            a, b = rng.randint(1, L.dim), rng.randint(1, L.dim)
            u, v = la.boundary(_random_chain(rng, L, a + 1)), la.boundary(_random_chain(rng, L, b + 1))
            if u.degree == a and v.degree == b:
                rec.check(
                    "[u,v] = -delta(u^v) for closed u, v",
                    la.schouten_chain(u, v) == -la.boundary(la.chain_wedge(u, v)),
                    algebra=name, u=u, v=v,
                )
            p, q = rng.randint(0, 2), rng.randint(0, 2)
            u, v = _random_chain(rng, L, p), _random_chain(rng, L, q)
            # the deviation bracket satisfies [u, v] = (-1)^(pq) [v, u]
            sgn = -1 if (p * q) % 2 else 1
            rec.check(
                "chain bracket graded symmetry",
                la.schouten_chain(u, v) == la.schouten_chain(v, u).scale(sgn),
                algebra=name, u=u, v=v,
            )

    H = la.heis3()
    Z = la.Ideal(H, [[0, 0, 1]])
    base = la.char_class(H, Z).coords
    T = la.trivial_module(H)
    for _ in range(per):
        alpha = la.random_projection(rng, H, Z)
        rec.check(
            "characteristic class independent of the projection",
            la.char_class(H, Z, alpha).coords == base,
            alpha=alpha,
        )
        k = rng.randint(1, 2)
        # cochains with i_v w = 0 for v = e3 in the center
        w = la.Cochain(T, k, {idx: _random_vec(rng, 1) for idx in itertools.combinations(range(2), k)})
        rec.check(
            "i_v w = 0 implies i_v dw = 0",
            la.ce_d(w).interior([0, 0, 1]).is_zero(),
            w=w.comps,
        )
    return rec.results()


# prequant


H_GRID = (Fraction(1), Fraction(1, 2), Fraction(2))


def suite_preq(rng: random.Random, n: int, max_degree: int, samples: int) -> List[Check]:
    rec = Recorder("preq")
    cs = ct.make_contact(n)
    for s in range(samples):
        f = random_poly(rng, n, max_degree, basic=True)
        g = random_poly(rng, n, max_degree, basic=True)
        h = H_GRID[s % len(H_GRID)]
        rec.values(f, g)
        for norm in pq.NORMALIZATIONS:
            rec.check(
                f"homomorphism defect vanishes ({norm})",
                pq.homomorphism_defect(cs, f, g, h, norm).is_zero(),
                f=f, g=g, h=h,
            )
        p = random_poly(rng, n, max_degree, basic=True)
        out = pq.apply(pq.lift(cs, f, h), pq.WaveFn(h, p))
        rec.values(out.p)
        expect = f * p + _ham_apply(cs, f, p, h).scale(-GaussRational(0, 1) / h)
        rec.check("o(f) = f - (i/h) ham(df) on weight h", out.p == expect, f=f, p=p, h=h)
    return rec.results()


def _ham_apply(cs, f: Poly, p: Poly, h) -> Poly:
    """ham(df) applied to p * E_h, with d0 acting as multiplication by ih."""
    X = ct.ham(cs, f)
    total = Poly.zero(cs.n)
    for (i,), c in X.comps.items():
        total = total + c * (p.scale(GaussRational(0, h)) if i == 0 else p.partial(i))
    return total


SUITE_FUNCS: Dict[str, Callable] = {
    "coeff": suite_coeff,
    "exterior": suite_exterior,
    "contact": suite_contact,
    "liealg": suite_liealg,
    "preq": suite_preq,
}


def run_suites(names, seed: int, n: int, max_degree: int, samples: int = 100) -> List[Check]:
    out: List[Check] = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        out.extend(SUITE_FUNCS[name](rng, n, max_degree, samples))
    return out
