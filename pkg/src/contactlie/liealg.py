"""Finite-dimensional Lie algebras over Q: Chevalley-Eilenberg complexes,
ideal homology, and the characteristic class of an ideal.

Vectors are lists of Fractions in the algebra's basis.  Cochains and chains
are stored on strictly increasing basis-index tuples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .exterior import merge_sign, sort_sign

Vector = List[Fraction]
Index = Tuple[int, ...]


class LieAlgebraError(ValueError):
    pass


class JacobiError(LieAlgebraError):
    def __init__(self, triple, names):
        self.triple = triple
        label = ", ".join(names[i] for i in triple)
        super().__init__(f"Jacobi identity fails for ({label})")


class IdealError(LieAlgebraError):
    pass


def _vec(v, dim=None) -> Vector:
    out = [Fraction(x) for x in v]
    if dim is not None and len(out) != dim:
        raise LieAlgebraError(f"vector {v} does not have length {dim}")
    return out


def _zero(dim: int) -> Vector:
    return [Fraction(0)] * dim


def _add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return [x + y for x, y in zip(a, b)]


def _scale(c, a: Sequence[Fraction]) -> Vector:
    return [c * x for x in a]


class LieAlgebra:
    """Structure constants c_ij^k; only pairs i < j are supplied."""

    def __init__(self, dim: int, brackets=None, basis_names=None, validate: bool = True):
        if dim < 0:
            raise LieAlgebraError("dimension must be non-negative")
        self.dim = dim
        self.basis_names = list(basis_names) if basis_names else [f"e{i + 1}" for i in range(dim)]
        if len(self.basis_names) != dim:
            raise LieAlgebraError("basis_names length does not match dim")
        table = [[_zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim) or i == j:
                raise LieAlgebraError(f"bad bracket index pair ({i}, {j})")
            v = _vec(coeffs, dim)
            if i > j:
                i, j, v = j, i, _scale(-1, v)
            table[i][j] = v
            table[j][i] = _scale(-1, v)
        self.table = table
        if validate:
            self.validate()

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        out = _zero(self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj and i != j:
                    c = xi * yj
                    out = [o + c * t for o, t in zip(out, self.table[i][j])]
        return out

    def unit(self, i: int) -> Vector:
        v = _zero(self.dim)
        v[i] = Fraction(1)
        return v

    def jacobiator(self, i: int, j: int, k: int) -> Vector:
        e = self.unit
        b = self.bracket
        return _add(_add(b(b(e(i), e(j)), e(k)), b(b(e(j), e(k)), e(i))), b(b(e(k), e(i)), e(j)))

    def validate(self) -> None:
        for i, j, k in itertools.combinations(range(self.dim), 3):
            if any(self.jacobiator(i, j, k)):
                raise JacobiError((i, j, k), self.basis_names)

    def structure_constants(self) -> Dict[Tuple[int, int], Vector]:
        return {
            (i, j): self.table[i][j]
            for i, j in itertools.combinations(range(self.dim), 2)
            if any(self.table[i][j])
        }

    def ad(self, x: Sequence) -> List[Vector]:
        """Matrix of ad_x (columns are images of basis vectors)."""
        cols = [self.bracket(x, self.unit(j)) for j in range(self.dim)]
        return linalg.transpose(cols, self.dim)

    @classmethod
    def from_json(cls, obj: dict) -> "LieAlgebra":
        try:
            dim = int(obj["dim"])
            names = obj.get("basis")
            brackets = {}
            for b in obj.get("brackets", []):
                i, j = int(b["i"]), int(b["j"])
                if i >= j:
                    raise LieAlgebraError(f"bracket entries need i < j, got ({i}, {j})")
                brackets[(i, j)] = [Fraction(str(c)) for c in b["coeffs"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            if isinstance(e, LieAlgebraError):
                raise
            raise LieAlgebraError(f"malformed Lie algebra JSON: {e}") from None
        return cls(dim, brackets, names)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": [
                {"i": i, "j": j, "coeffs": [str(c) for c in v]}
                for (i, j), v in self.structure_constants().items()
            ],
        }

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, {self.structure_constants()})"


# standard algebras


def heis3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): [0, 0, 1]}, ["e1", "e2", "e3"])


def sl2() -> LieAlgebra:
    # basis h, e, f
    return LieAlgebra(3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}, ["h", "e", "f"])


def abelian(d: int) -> LieAlgebra:
    return LieAlgebra(d)


def affine2() -> LieAlgebra:
    """The 2-dimensional nonabelian algebra [e1, e2] = e2."""
    return LieAlgebra(2, {(0, 1): [0, 1]})


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    dim = a.dim + b.dim
    br = {}
    for (i, j), v in a.structure_constants().items():
        br[(i, j)] = list(v) + [0] * b.dim
    for (i, j), v in b.structure_constants().items():
        br[(a.dim + i, a.dim + j)] = [0] * a.dim + list(v)
    return LieAlgebra(dim, br, a.basis_names + [f"{s}'" for s in b.basis_names])


def change_basis(L: LieAlgebra, P: Sequence[Sequence]) -> LieAlgebra:
    """The same algebra in the basis f_a = sum_k P[k][a] e_k."""
    P = linalg.as_matrix(P)
    Pinv = linalg.inverse(P)
    cols = linalg.transpose(P)
    br = {}
    for a, b in itertools.combinations(range(L.dim), 2):
        v = linalg.matvec(Pinv, L.bracket(cols[a], cols[b]))
        if any(v):
            br[(a, b)] = v
    return LieAlgebra(L.dim, br)


def semidirect(D: Sequence[Sequence], base: Optional[LieAlgebra] = None) -> LieAlgebra:
    """Q acting on ``base`` (default abelian) through the derivation D."""
    D = linalg.as_matrix(D)
    m = len(D)
    base = base or abelian(m)
    br = {}
    for j in range(m):
        br[(0, j + 1)] = [0] + [D[k][j] for k in range(m)]
    for (i, j), v in base.structure_constants().items():
        br[(i + 1, j + 1)] = [0] + list(v)
    return LieAlgebra(m + 1, br)


def random_solvable(rng: random.Random, dim: int = 4) -> LieAlgebra:
    """A random solvable algebra of dimension ``dim`` in a random basis."""
    m = dim - 1
    kind = rng.choice(["abelian", "heis"]) if m == 3 else "abelian"
    if kind == "heis":
        a, b, c, dd, e, f = (rng.randint(-2, 2) for _ in range(6))
        # derivations of heis3 with [e1, e2] = e3
        D = [[a, b, 0], [c, dd, 0], [e, f, a + dd]]
        L = semidirect(D, heis3())
    else:
        D = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)]
        L = semidirect(D)
    while True:
        P = [[rng.randint(-1, 1) for _ in range(dim)] for _ in range(dim)]
        if linalg.rank(P) == dim:
            break
    out = change_basis(L, P)
    out.validate()
    return out


# modules


class LieModule:
    """A finite-dimensional representation: rho[i] is the matrix of e_i."""

    def __init__(self, algebra: LieAlgebra, rank: int, rho, validate: bool = True):
        self.algebra = algebra
        self.rank = rank
        self.rho = [linalg.as_matrix(m) for m in rho]
        if len(self.rho) != algebra.dim or any(
            len(m) != rank or any(len(r) != rank for r in m) for m in self.rho
        ):
            raise LieAlgebraError("module matrices have the wrong shape")
        if validate:
            self.validate()

    def act(self, x: Sequence, s: Sequence) -> Vector:
        out = _zero(self.rank)
        for i, xi in enumerate(x):
            if xi:
                out = _add(out, _scale(xi, linalg.matvec(self.rho[i], s)))
        return out

    def act_basis(self, i: int, s: Sequence) -> Vector:
        return linalg.matvec(self.rho[i], s)

    def matrix_of(self, x: Sequence) -> List[Vector]:
        out = [[Fraction(0)] * self.rank for _ in range(self.rank)]
        for i, xi in enumerate(x):
            if xi:
                out = [[a + xi * b for a, b in zip(r1, r2)] for r1, r2 in zip(out, self.rho[i])]
        return out

    def validate(self) -> None:
        L = self.algebra
        for i, j in itertools.combinations(range(L.dim), 2):
            lhs = self.matrix_of(L.bracket_basis(i, j))
            ab = linalg.matmul(self.rho[i], self.rho[j])
            ba = linalg.matmul(self.rho[j], self.rho[i])
            rhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
            if lhs != rhs:
                raise LieAlgebraError(
                    f"not a representation: rho([{L.basis_names[i]}, {L.basis_names[j]}]) "
                    "!= [rho, rho]"
                )


def trivial_module(L: LieAlgebra, rank: int = 1) -> LieModule:
    return LieModule(L, rank, [[[0] * rank for _ in range(rank)] for _ in range(L.dim)], validate=False)


def adjoint_module(L: LieAlgebra) -> LieModule:
    return LieModule(L, L.dim, [L.ad(L.unit(i)) for i in range(L.dim)])


# cochains


@dataclass
class Cochain:
    """An alternating k-linear map on the algebra with values in ``module``."""

    module: LieModule
    degree: int
    comps: Dict[Index, Vector] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, v in self.comps.items():
            sign, key = sort_sign(idx)
            if len(idx) != self.degree:
                raise LieAlgebraError(f"cochain index {idx} has the wrong length")
            if sign == 0:
                continue
            v = _vec(v, self.module.rank)
            if sign < 0:
                v = _scale(-1, v)
            prev = clean.get(key)
            clean[key] = v if prev is None else _add(prev, v)
        self.comps = {k: v for k, v in clean.items() if any(v)}

    @property
    def algebra(self) -> LieAlgebra:
        return self.module.algebra

    def value(self, idx: Sequence[int]) -> Vector:
        sign, key = sort_sign(idx)
        if sign == 0:
            return _zero(self.module.rank)
        v = self.comps.get(key)
        if v is None:
            return _zero(self.module.rank)
        return v if sign > 0 else _scale(-1, v)

    def evaluate(self, *vectors: Sequence) -> Vector:
        """Multilinear evaluation on arbitrary vectors."""
        if len(vectors) != self.degree:
            raise LieAlgebraError("wrong number of arguments")
        out = _zero(self.module.rank)
        supports = [[(i, c) for i, c in enumerate(v) if c] for v in vectors]
        for choice in itertools.product(*supports):
            coef = Fraction(1)
            idx = []
            for i, c in choice:
                coef *= c
                idx.append(i)
            out = _add(out, _scale(coef, self.value(idx)))
        return out

    def interior(self, v: Sequence) -> "Cochain":
        """i_v: insert v as the first argument."""
        if self.degree == 0:
            return Cochain(self.module, 0, {})
        L = self.algebra
        comps = {}
        for idx in itertools.combinations(range(L.dim), self.degree - 1):
            val = _zero(self.module.rank)
            for i, vi in enumerate(v):
                if vi:
                    val = _add(val, _scale(vi, self.value((i,) + idx)))
            comps[idx] = val
        return Cochain(self.module, self.degree - 1, comps)

    def is_zero(self) -> bool:
        return not self.comps

    def to_vector(self) -> Vector:
        out = []
        for idx in itertools.combinations(range(self.algebra.dim), self.degree):
            out.extend(self.value(idx))
        return out

    @classmethod
    def from_vector(cls, module: LieModule, degree: int, vec: Sequence) -> "Cochain":
        r = module.rank
        comps = {}
        for n_, idx in enumerate(itertools.combinations(range(module.algebra.dim), degree)):
            comps[idx] = list(vec[n_ * r:(n_ + 1) * r])
        return cls(module, degree, comps)

    def __add__(self, other: "Cochain") -> "Cochain":
        comps = dict(self.comps)
        for k, v in other.comps.items():
            comps[k] = _add(comps[k], v) if k in comps else v
        return Cochain(self.module, self.degree, comps)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, c) -> "Cochain":
        return Cochain(self.module, self.degree, {k: _scale(Fraction(c), v) for k, v in self.comps.items()})

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.comps == other.comps


def ce_d(omega: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential (Koszul formula)."""
    S = omega.module
    L = S.algebra
    k = omega.degree
    comps = {}
    for idx in itertools.combinations(range(L.dim), k + 1):
        val = _zero(S.rank)
        for a in range(k + 1):
            rest = idx[:a] + idx[a + 1:]
            term = S.act_basis(idx[a], omega.value(rest))
            val = _add(val, term if a % 2 == 0 else _scale(-1, term))
        for a, b in itertools.combinations(range(k + 1), 2):
            br = L.bracket_basis(idx[a], idx[b])
            if not any(br):
                continue
            rest = tuple(idx[c] for c in range(k + 1) if c != a and c != b)
            term = omega.evaluate(br, *[L.unit(j) for j in rest])
            # (-1)^(i+j) with 1-based positions
            val = _add(val, term if (a + b) % 2 == 0 else _scale(-1, term))
        comps[idx] = val
    return Cochain(S, k + 1, comps)


def ce_matrix(S: LieModule, k: int) -> List[Vector]:
    """Matrix of ce_d from k-cochains to (k+1)-cochains."""
    L = S.algebra
    n_src = _binom(L.dim, k) * S.rank
    n_dst = _binom(L.dim, k + 1) * S.rank
    cols = []
    for j in range(n_src):
        e = [Fraction(int(t == j)) for t in range(n_src)]
        cols.append(ce_d(Cochain.from_vector(S, k, e)).to_vector())
    if not cols:
        return [[] for _ in range(n_dst)]
    return linalg.transpose(cols, n_src)


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    from math import comb

    return comb(n, k)


@dataclass
class CohomologyResult:
    degree: int
    dim: int
    basis: list
    ranks: Tuple[int, int]


def _quotient(cycles: List[Vector], boundaries: List[Vector]) -> List[Vector]:
    return linalg.extend_basis(boundaries, cycles)


def cohomology(L: LieAlgebra, S: Optional[LieModule], k: int, rank_fn=None) -> CohomologyResult:
    """H^k(L; S) by exact rank / nullspace computations."""
    S = S or trivial_module(L)
    if not 0 <= k <= L.dim:
        raise LieAlgebraError(f"degree {k} out of range 0..{L.dim}")
    rank_fn = rank_fn or linalg.rank
    n_k = _binom(L.dim, k) * S.rank
    dk = ce_matrix(S, k)
    dk1 = ce_matrix(S, k - 1) if k > 0 else []
    r_out = rank_fn(dk) if dk and n_k else 0
    r_in = rank_fn(dk1) if dk1 and k > 0 and dk1[0] else 0
    dim = n_k - r_out - r_in
    cycles = linalg.nullspace(dk, n_k) if dk else [
        [Fraction(int(i == j)) for j in range(n_k)] for i in range(n_k)
    ]
    if k > 0 and dk1 and dk1[0]:
        boundaries = linalg.span_basis(linalg.transpose(dk1))
    else:
        boundaries = []
    reps = _quotient(cycles, boundaries)
    if len(reps) != dim:
        raise ArithmeticError("cohomology rank count disagrees with basis extension")
    basis = [Cochain.from_vector(S, k, v) for v in reps]
    return CohomologyResult(k, dim, basis, (r_out, r_in))


def cohomology_dims(L: LieAlgebra, S: Optional[LieModule] = None, rank_fn=None) -> List[int]:
    return [cohomology(L, S, k, rank_fn).dim for k in range(L.dim + 1)]


def class_coordinates(S: LieModule, k: int, cocycle: Cochain, result: Optional[CohomologyResult] = None):
    """Coordinates of a cocycle's class in the basis returned by ``cohomology``."""
    L = S.algebra
    result = result or cohomology(L, S, k)
    v = cocycle.to_vector()
    if any(ce_d(cocycle).to_vector()):
        raise LieAlgebraError("not a cocycle")
    if k > 0:
        dk1 = ce_matrix(S, k - 1)
        boundaries = linalg.span_basis(linalg.transpose(dk1)) if dk1 and dk1[0] else []
    else:
        boundaries = []
    basis = boundaries + [b.to_vector() for b in result.basis]
    coords = linalg.coordinates(basis, v)
    if coords is None:
        raise ArithmeticError("cocycle not in the span of boundaries and class basis")
    return coords[len(boundaries):]


# chains


@dataclass
class Chain:
    """An element of the k-th exterior power of the algebra, coefficients in Q."""

    algebra: LieAlgebra
    degree: int
    comps: Dict[Index, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[Index, Fraction] = {}
        for idx, c in self.comps.items():
            if len(idx) != self.degree:
                raise LieAlgebraError(f"chain index {idx} has the wrong length")
            sign, key = sort_sign(idx)
            if sign == 0:
                continue
            clean[key] = clean.get(key, Fraction(0)) + sign * Fraction(c)
        self.comps = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_vectors(cls, L: LieAlgebra, *vectors: Sequence) -> "Chain":
        """x1 ^ ... ^ xk for arbitrary vectors."""
        out = cls(L, 0, {(): Fraction(1)})
        for v in vectors:
            out = chain_wedge(out, cls(L, 1, {(i,): c for i, c in enumerate(v) if c}))
        return out

    def __add__(self, other: "Chain") -> "Chain":
        if not other.comps:
            return self
        if not self.comps:
            return other
        if other.degree != self.degree:
            raise LieAlgebraError("cannot add chains of different degree")
        comps = dict(self.comps)
        for k, v in other.comps.items():
            comps[k] = comps.get(k, Fraction(0)) + v
        return Chain(self.algebra, self.degree, comps)

    def scale(self, c) -> "Chain":
        return Chain(self.algebra, self.degree, {k: Fraction(c) * v for k, v in self.comps.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.comps

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.comps == other.comps and (not self.comps or self.degree == other.degree)

    def to_vector(self) -> Vector:
        return [
            self.comps.get(idx, Fraction(0))
            for idx in itertools.combinations(range(self.algebra.dim), self.degree)
        ]

    @classmethod
    def from_vector(cls, L: LieAlgebra, degree: int, vec: Sequence) -> "Chain":
        return cls(L, degree, dict(zip(itertools.combinations(range(L.dim), degree), vec)))

    def __str__(self):
        if not self.comps:
            return "0"
        names = self.algebra.basis_names
        parts = []
        for k in sorted(self.comps):
            basis = "^".join(names[i] for i in k) or "1"
            c = self.comps[k]
            parts.append(basis if c == 1 else f"{c}*{basis}")
        return " + ".join(parts)


def chain_wedge(u: Chain, v: Chain) -> Chain:
    comps: Dict[Index, Fraction] = {}
    for ku, cu in u.comps.items():
        for kv, cv in v.comps.items():
            sign, key = merge_sign(ku, kv)
            if sign:
                comps[key] = comps.get(key, Fraction(0)) + sign * cu * cv
    return Chain(u.algebra, u.degree + v.degree, comps)


def boundary(u: Chain) -> Chain:
    """delta(x1^...^xm) = sum_{i<j} (-1)^(i+j) [xi, xj] ^ (rest)."""
    L = u.algebra
    m = u.degree
    out = Chain(L, max(m - 1, 0), {})
    if m < 2:
        return out
    for idx, c in u.comps.items():
        for a, b in itertools.combinations(range(m), 2):
            br = L.bracket_basis(idx[a], idx[b])
            if not any(br):
                continue
            rest = tuple(idx[t] for t in range(m) if t != a and t != b)
            sign = c if (a + b) % 2 == 0 else -c
            head = Chain(L, 1, {(i,): sign * x for i, x in enumerate(br) if x})
            out = out + chain_wedge(head, Chain(L, m - 2, {rest: Fraction(1)}))
    return out


def schouten_chain(u: Chain, v: Chain) -> Chain:
    """[u, v] = delta(u)^v + (-1)^m u^delta(v) - delta(u^v), m = deg u."""
    m = u.degree
    first = chain_wedge(boundary(u), v)
    second = chain_wedge(u, boundary(v))
    if m % 2:
        second = -second
    return first + second - boundary(chain_wedge(u, v))


def boundary_matrix(L: LieAlgebra, k: int) -> List[Vector]:
    """Matrix of delta from degree k to degree k-1."""
    src = list(itertools.combinations(range(L.dim), k))
    cols = [boundary(Chain(L, k, {idx: Fraction(1)})).to_vector() if k >= 1 else [] for idx in src]
    n_dst = _binom(L.dim, k - 1)
    if not cols or k < 1:
        return [[Fraction(0)] * len(src) for _ in range(n_dst)]
    cols = [c if c else [Fraction(0)] * n_dst for c in cols]
    return linalg.transpose(cols, len(src))


@dataclass
class HomologyResult:
    degree: int
    dim: int
    representatives: List[Chain]


def homology(V, k: int, rank_fn=None) -> HomologyResult:
    """H_k of a Lie algebra (or an ideal, taken as an algebra) with Q coefficients."""
    if isinstance(V, Ideal):
        V = V.as_algebra()
    if not 0 <= k <= V.dim:
        raise LieAlgebraError(f"degree {k} out of range 0..{V.dim}")
    rank_fn = rank_fn or linalg.rank
    n_k = _binom(V.dim, k)
    dk = boundary_matrix(V, k)
    dk1 = boundary_matrix(V, k + 1)
    r_out = rank_fn(dk) if k >= 1 and dk and dk[0] else 0
    r_in = rank_fn(dk1) if k + 1 <= V.dim and dk1 and dk1[0] else 0
    dim = n_k - r_out - r_in
    if k >= 1 and dk:
        cycles = linalg.nullspace(dk, n_k)
    else:
        cycles = [[Fraction(int(i == j)) for j in range(n_k)] for i in range(n_k)]
    boundaries = linalg.span_basis(linalg.transpose(dk1)) if r_in else []
    reps = _quotient(cycles, boundaries)
    if len(reps) != dim:
        raise ArithmeticError("homology rank count disagrees with basis extension")
    return HomologyResult(k, dim, [Chain.from_vector(V, k, r) for r in reps])


# ideals


class Ideal:
    """An ideal of ``parent`` spanned by ``basis`` (vectors in parent coordinates)."""

    def __init__(self, parent: LieAlgebra, basis: Sequence[Sequence]):
        self.parent = parent
        vecs = [_vec(b, parent.dim) for b in basis]
        if linalg.rank(vecs) != len(vecs):
            raise IdealError("ideal basis vectors are linearly dependent")
        self.basis = vecs
        for a, v in enumerate(vecs):
            for i in range(parent.dim):
                w = parent.bracket(parent.unit(i), v)
                if not linalg.in_span(vecs, w):
                    raise IdealError(
                        f"[{parent.basis_names[i]}, v{a}] is not in the subspace; not an ideal"
                    )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: Sequence) -> Vector:
        c = linalg.coordinates(self.basis, x)
        if c is None:
            raise IdealError(f"vector {list(x)} is not in the ideal")
        return c

    def embed(self, c: Sequence) -> Vector:
        out = _zero(self.parent.dim)
        for ci, b in zip(c, self.basis):
            if ci:
                out = _add(out, _scale(ci, b))
        return out

    def contains(self, x: Sequence) -> bool:
        return linalg.in_span(self.basis, x)

    def as_algebra(self) -> LieAlgebra:
        br = {}
        for a, b in itertools.combinations(range(self.dim), 2):
            v = self.coords(self.parent.bracket(self.basis[a], self.basis[b]))
            if any(v):
                br[(a, b)] = v
        return LieAlgebra(self.dim, br, [f"v{a + 1}" for a in range(self.dim)])

    def complement(self) -> List[Vector]:
        """Standard basis vectors completing the ideal basis to a basis of L."""
        units = [self.parent.unit(i) for i in range(self.parent.dim)]
        return linalg.extend_basis(self.basis, units)

    def embed_chain(self, u: Chain) -> Chain:
        """Push a chain on the ideal's basis into the parent exterior algebra."""
        L = self.parent
        out = Chain(L, u.degree, {})
        for idx, c in u.comps.items():
            out = out + Chain.from_vectors(L, *[self.basis[a] for a in idx]).scale(c)
        return out


def is_subalgebra(L: LieAlgebra, vectors: Sequence[Sequence]) -> bool:
    vecs = linalg.span_basis(vectors)
    return all(linalg.in_span(vecs, L.bracket(a, b)) for a, b in itertools.combinations(vecs, 2))


@dataclass
class IdealSplitting:
    """Coordinates adapted to 0 -> V -> L -> L/V -> 0 and H_V = V/[V,V]."""

    L: LieAlgebra
    V: Ideal
    complement: List[Vector]
    inv: List[Vector]
    derived: List[Vector]
    h_basis: List[Vector]
    h_proj: List[Vector]

    @classmethod
    def build(cls, L: LieAlgebra, V: Ideal) -> "IdealSplitting":
        comp = V.complement()
        cols = V.basis + comp
        inv = linalg.inverse(linalg.transpose(cols))
        r = V.dim
        derived = linalg.span_basis(
            [V.coords(L.bracket(a, b)) for a, b in itertools.combinations(V.basis, 2)]
        )
        units = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        h_basis = linalg.extend_basis(derived, units)
        full = derived + h_basis
        h_proj = linalg.inverse(linalg.transpose(full))[len(derived):] if full else []
        return cls(L, V, comp, inv, derived, h_basis, h_proj)

    @property
    def h_dim(self) -> int:
        return len(self.h_basis)

    def split(self, x: Sequence) -> Tuple[Vector, Vector]:
        c = linalg.matvec(self.inv, x)
        return c[: self.V.dim], c[self.V.dim:]

    def to_h(self, v_coords: Sequence) -> Vector:
        """Class in H_V of an ideal element given in ideal coordinates."""
        return linalg.matvec(self.h_proj, v_coords) if self.h_proj else []

    def h_rep(self, b: int) -> Vector:
        return self.V.embed(self.h_basis[b])

    def default_projection(self) -> List[Vector]:
        """alpha: L -> V killing the complement, as a matrix in L coordinates."""
        L = self.L
        cols = []
        for i in range(L.dim):
            vpart, _ = self.split(L.unit(i))
            cols.append(self.V.embed(vpart))
        return linalg.transpose(cols, L.dim)

    def action_on_h(self, x: Sequence) -> List[Vector]:
        """Matrix of x acting on H_V by x.[w] = [[x, w]]."""
        cols = [self.to_h(self.V.coords(self.L.bracket(x, self.h_rep(b)))) for b in range(self.h_dim)]
        return linalg.transpose(cols, self.h_dim) if cols else []

    def quotient_algebra(self) -> LieAlgebra:
        L = self.L
        s = len(self.complement)
        br = {}
        for a, b in itertools.combinations(range(s), 2):
            _, cpart = self.split(L.bracket(self.complement[a], self.complement[b]))
            if any(cpart):
                br[(a, b)] = cpart
        return LieAlgebra(s, br, [f"q{a + 1}" for a in range(s)])

    def module_over_l(self) -> LieModule:
        return LieModule(self.L, self.h_dim, [self.action_on_h(self.L.unit(i)) for i in range(self.L.dim)])

    def module_over_quotient(self, Q: LieAlgebra) -> LieModule:
        return LieModule(Q, self.h_dim, [self.action_on_h(c) for c in self.complement])


def h1_module(L: LieAlgebra, V: Ideal):
    """(L/V, H_1(V) = V/[V,V] as an L/V-module)."""
    sp = IdealSplitting.build(L, V)
    for v in V.basis:
        if any(any(r) for r in sp.action_on_h(v)):
            raise ArithmeticError("ideal acts nontrivially on its own first homology")
    Q = sp.quotient_algebra()
    Q.validate()
    return Q, sp.module_over_quotient(Q)


def check_projection(L: LieAlgebra, V: Ideal, alpha: Sequence[Sequence]) -> List[Vector]:
    alpha = linalg.as_matrix(alpha)
    if len(alpha) != L.dim or any(len(r) != L.dim for r in alpha):
        raise IdealError("projection must be a dim x dim matrix")
    for v in V.basis:
        if linalg.matvec(alpha, v) != v:
            raise IdealError("projection does not fix the ideal")
    for i in range(L.dim):
        if not V.contains(linalg.matvec(alpha, L.unit(i))):
            raise IdealError("projection image is not contained in the ideal")
    return alpha


def random_projection(rng: random.Random, L: LieAlgebra, V: Ideal) -> List[Vector]:
    """alpha + K (1 - alpha) with K: L -> V random."""
    sp = IdealSplitting.build(L, V)
    alpha = sp.default_projection()
    K = [[Fraction(0)] * L.dim for _ in range(L.dim)]
    for j in range(L.dim):
        coeffs = [rng.randint(-3, 3) for _ in range(V.dim)]
        col = V.embed(coeffs)
        for i in range(L.dim):
            K[i][j] = col[i]
    one_minus = [[Fraction(int(i == j)) - alpha[i][j] for j in range(L.dim)] for i in range(L.dim)]
    Km = linalg.matmul(K, one_minus)
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(alpha, Km)]


@dataclass
class CharClass:
    h2_dim: int
    coords: Vector
    cocycle: Cochain
    alpha_tilde: Cochain

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


def char_class(L: LieAlgebra, V: Ideal, projection=None) -> CharClass:
    """The class of d(alpha~) in H^2(L/V; H_1(V))."""
    sp = IdealSplitting.build(L, V)
    alpha = check_projection(L, V, projection) if projection is not None else sp.default_projection()
    S_L = sp.module_over_l()
    comps = {}
    for i in range(L.dim):
        comps[(i,)] = sp.to_h(V.coords(linalg.matvec(alpha, L.unit(i))))
    alpha_tilde = Cochain(S_L, 1, comps)
    dat = ce_d(alpha_tilde)
    for v in V.basis:
        if not dat.interior(v).is_zero():
            raise ArithmeticError("i_v d(alpha~) != 0 for an ideal element v")
    Q = sp.quotient_algebra()
    S_Q = sp.module_over_quotient(Q)
    s = Q.dim
    qcomps = {}
    for a, b in itertools.combinations(range(s), 2):
        qcomps[(a, b)] = dat.evaluate(sp.complement[a], sp.complement[b])
    cocycle = Cochain(S_Q, 2, qcomps)
    if s < 2 or S_Q.rank == 0:
        return CharClass(0, [], cocycle, alpha_tilde)
    result = cohomology(Q, S_Q, 2)
    coords = class_coordinates(S_Q, 2, cocycle, result)
    return CharClass(result.dim, coords, cocycle, alpha_tilde)


def adjoint_on_ideal(L: LieAlgebra, V: Ideal) -> LieModule:
    """V as an L-module under the adjoint action, in ideal coordinates."""
    rho = []
    for i in range(L.dim):
        cols = [V.coords(L.bracket(L.unit(i), v)) for v in V.basis]
        rho.append(linalg.transpose(cols, V.dim))
    return LieModule(L, V.dim, rho)


def curvature(L: LieAlgebra, V: Ideal, alpha) -> Cochain:
    """R(X, Y) = -alpha([X - alpha X, Y - alpha Y]), valued in V (ideal coordinates)."""
    alpha = check_projection(L, V, alpha)
    S = adjoint_on_ideal(L, V)
    horiz = [
        [u - a for u, a in zip(L.unit(i), linalg.matvec(alpha, L.unit(i)))] for i in range(L.dim)
    ]
    comps = {}
    for i, j in itertools.combinations(range(L.dim), 2):
        val = linalg.matvec(alpha, L.bracket(horiz[i], horiz[j]))
        comps[(i, j)] = _scale(-1, V.coords(val))
    return Cochain(S, 2, comps)


def curvature_via_d(L: LieAlgebra, V: Ideal, alpha) -> Cochain:
    """(d alpha)(X, Y) - [alpha X, alpha Y] with alpha as a V-valued 1-cochain."""
    alpha = check_projection(L, V, alpha)
    S = adjoint_on_ideal(L, V)
    a1 = Cochain(S, 1, {(i,): V.coords(linalg.matvec(alpha, L.unit(i))) for i in range(L.dim)})
    da = ce_d(a1)
    comps = {}
    for i, j in itertools.combinations(range(L.dim), 2):
        ax = linalg.matvec(alpha, L.unit(i))
        ay = linalg.matvec(alpha, L.unit(j))
        comps[(i, j)] = [x - y for x, y in zip(da.value((i, j)), V.coords(L.bracket(ax, ay)))]
    return Cochain(S, 2, comps)


def projection_kernel(L: LieAlgebra, alpha) -> List[Vector]:
    alpha = linalg.as_matrix(alpha)
    return linalg.nullspace(alpha, L.dim)
