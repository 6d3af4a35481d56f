"""Seeded random polynomials, forms and multivectors for identity checks."""

from __future__ import annotations

import itertools
import random
from typing import Optional

from .coeff import Poly
from .exterior import Form, MultiVec


def random_coeff(rng: random.Random, nonzero: bool = True) -> int:
    while True:
        c = rng.randint(-3, 3)
        if c or not nonzero:
            return c


def random_monomial(rng: random.Random, n: int, max_degree: int, basic: bool = False):
    nv = 2 * n + 1
    exps = [0] * nv
    start = 1 if basic else 0
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(start, nv)] += 1
    return tuple(exps)


def random_poly(
    rng: random.Random,
    n: int,
    max_degree: int,
    basic: bool = False,
    max_terms: int = 4,
    nonzero: bool = False,
) -> Poly:
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = random_monomial(rng, n, max_degree, basic)
            terms[e] = terms.get(e, 0) + random_coeff(rng)
        p = Poly(n, terms)
        if p or not nonzero:
            return p


def random_graded(
    rng: random.Random,
    cls,
    n: int,
    degree: int,
    max_degree: int,
    basic: bool = False,
    max_terms: int = 3,
    skip_index: Optional[int] = None,
):
    idxs = [
        k
        for k in itertools.combinations(range(2 * n + 1), degree)
        if skip_index is None or skip_index not in k
    ]
    comps = {}
    if not idxs:
        return cls.zero(n, degree)
    for _ in range(rng.randint(1, max_terms)):
        k = rng.choice(idxs)
        comps[k] = random_poly(rng, n, max_degree, basic=basic, max_terms=2)
    return cls(n, degree, comps)


def random_form(rng, n, degree, max_degree, basic=False, max_terms=3) -> Form:
    return random_graded(rng, Form, n, degree, max_degree, basic, max_terms)


def random_multivec(rng, n, degree, max_degree, basic=False, max_terms=3) -> MultiVec:
    return random_graded(rng, MultiVec, n, degree, max_degree, basic, max_terms)


def random_basic_form(rng, n, degree, max_degree, max_terms=3) -> Form:
    """Basic forms: no dx0 factor and coefficients free of x0."""
    return random_graded(rng, Form, n, degree, max_degree, True, max_terms, skip_index=0)
