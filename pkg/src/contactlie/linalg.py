"""Exact linear algebra over Q on lists of Fractions.

Two independent elimination routes are provided: Gauss-Jordan over
Fractions (``rref``) and fraction-free Bareiss elimination over the
integers (``bareiss_rank``).  Everything is deterministic: pivots are the
leftmost nonzero columns, scanned top to bottom.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def as_matrix(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is not None and any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    return m


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def rref(m: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    a = as_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def bareiss_rank(m: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination on an integer-scaled copy."""
    a = []
    for row in m:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        a.append([int(x * den) for x in row])
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (p * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = p
        r += 1
    return r


def nullspace(m: Sequence[Sequence], ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0}; one vector per free column, in column order."""
    if not m:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    r, pivots = rref(m)
    n = len(r[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row][f]
        basis.append(v)
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """One solution of m x = b (free variables zero), or None."""
    rows = len(m)
    if rows == 0:
        return []
    n = len(m[0])
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in enumerate(pivots):
        x[pc] = r[row][n]
    return x


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def matvec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose([list(r) for r in b])
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def span_basis(vectors: Sequence[Sequence]) -> List[Vector]:
    """Greedy subset of ``vectors`` forming a basis of their span."""
    chosen: List[Vector] = []
    for v in vectors:
        v = [Fraction(x) for x in v]
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def extend_basis(sub: Sequence[Sequence], candidates: Sequence[Sequence]) -> List[Vector]:
    """Vectors from ``candidates`` that extend ``sub`` to a basis of their joint span."""
    base = span_basis(sub)
    added: List[Vector] = []
    for v in candidates:
        v = [Fraction(x) for x in v]
        if rank(base + added + [v]) > len(base) + len(added):
            added.append(v)
    return added


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[Vector]:
    """Coefficients c with sum c_i basis_i == v, or None if v is not in the span."""
    if not basis:
        return [] if not any(v) else None
    return solve(transpose([list(b) for b in basis]), list(v))


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
