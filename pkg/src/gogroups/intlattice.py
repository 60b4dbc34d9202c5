"""Exact integer matrices: Smith normal form, cyclic subgroups of Z^r, coset representatives.

Matrices are plain lists of lists of Python ints. Nothing here touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]


class DegenerateEdgeError(ValueError):
    """Raised when a cyclic subgroup is given by the zero vector."""


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(A: Matrix) -> int:
    """Bareiss fraction-free elimination; exact."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    U: Matrix
    D: Matrix
    V: Matrix

    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Return U, D, V with U A V = D, U and V unimodular, D in Smith form.

    Pivot is the entry of least nonzero absolute value in the trailing block,
    first in row-major order on ties.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [list(map(int, r)) for r in A]
    if any(len(r) != cols for r in D):
        raise ValueError("ragged matrix")
    U = identity(rows)
    V = identity(cols)

    def row_add(dst, src, q):  # row_dst -= q * row_src
        if q:
            for M in (D, U):
                rd, rs = M[dst], M[src]
                for j in range(len(rd)):
                    rd[j] -= q * rs[j]

    def col_add(dst, src, q):  # col_dst -= q * col_src
        if q:
            for M in (D, V):
                for r in M:
                    r[dst] -= q * r[src]

    def row_swap(i, j):
        if i != j:
            for M in (D, U):
                M[i], M[j] = M[j], M[i]

    def col_swap(i, j):
        if i != j:
            for M in (D, V):
                for r in M:
                    r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = D[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return SmithDecomposition(U, D, V)
            _, i, j = best
            row_swap(t, i)
            col_swap(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, rows):
                row_add(i, t, D[i][t] // p)
                clean &= D[i][t] == 0
            for j in range(t + 1, cols):
                col_add(j, t, D[t][j] // p)
                clean &= D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, -1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
        t += 1
    return SmithDecomposition(U, D, V)


def is_smith_form(D: Matrix) -> bool:
    rows = len(D)
    cols = len(D[0]) if rows else 0
    for i in range(rows):
        for j in range(cols):
            if i != j and D[i][j]:
                return False
    diag = [D[i][i] for i in range(min(rows, cols))]
    nz = [d for d in diag if d]
    if any(d < 0 for d in diag) or diag[: len(nz)] != nz:
        return False
    return all(nz[k + 1] % nz[k] == 0 for k in range(len(nz) - 1))


def _check_nonzero(v: Sequence[int]) -> Vector:
    v = tuple(int(x) for x in v)
    if not any(v):
        raise DegenerateEdgeError("zero vector does not generate an infinite cyclic subgroup")
    return v


def content(v: Sequence[int]) -> int:
    return reduce(gcd, (abs(x) for x in v), 0)


def is_primitive(v: Sequence[int]) -> bool:
    return content(_check_nonzero(v)) == 1


def cyclic_membership(v: Sequence[int], u: Sequence[int]) -> int | None:
    """Return k with u = k*v, or None."""
    v = _check_nonzero(v)
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    i = next(j for j, x in enumerate(v) if x)
    if u[i] % v[i]:
        return None
    k = u[i] // v[i]
    return k if all(k * a == b for a, b in zip(v, u)) else None


def primitive_part(v: Sequence[int]) -> tuple[int, Vector]:
    """Split v = c * p with p primitive and first nonzero entry of p positive."""
    v = _check_nonzero(v)
    c = content(v)
    p = tuple(x // c for x in v)
    if next(x for x in p if x) < 0:
        c, p = -c, tuple(-x for x in p)
    return c, p


def cyclic_intersection(p: Sequence[int], q: Sequence[int]) -> Vector:
    """Generator of <p> ∩ <q> as a multiple of p (zero vector when trivial)."""
    a, u = primitive_part(p)
    b, w = primitive_part(q)
    if u != w:
        return tuple(0 for _ in p)
    j = abs(b) // gcd(a, b)
    return tuple(j * x for x in p)


@lru_cache(maxsize=None)
def _edge_basis(v: Vector) -> tuple[tuple[Vector, ...], tuple[Vector, ...], int]:
    """Unimodular B (with inverse) and d > 0 such that B v = d e_1."""
    r = len(v)
    vec = list(v)
    B = identity(r)
    Binv = identity(r)
    while sum(1 for x in vec if x) > 1:
        i = min((j for j in range(r) if vec[j]), key=lambda j: (abs(vec[j]), j))
        for j in range(r):
            if j != i and vec[j]:
                q = vec[j] // vec[i]
                vec[j] -= q * vec[i]
                B[j] = [x - q * y for x, y in zip(B[j], B[i])]
                for row in Binv:
                    row[i] += q * row[j]
    i = next(j for j in range(r) if vec[j])
    if i:
        vec[0], vec[i] = vec[i], vec[0]
        B[0], B[i] = B[i], B[0]
        for row in Binv:
            row[0], row[i] = row[i], row[0]
    if vec[0] < 0:
        vec[0] = -vec[0]
        B[0] = [-x for x in B[0]]
        for row in Binv:
            row[0] = -row[0]
    return tuple(map(tuple, B)), tuple(map(tuple, Binv)), vec[0]


def coset_decompose(v: Sequence[int], u: Sequence[int]) -> tuple[Vector, int]:
    """Write u = rep + k*v with rep the canonical representative of u + <v>."""
    v = _check_nonzero(v)
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    B, Binv, d = _edge_basis(v)
    coords = [sum(b * x for b, x in zip(row, u)) for row in B]
    k, coords[0] = divmod(coords[0], d)
    rep = tuple(sum(b * x for b, x in zip(row, coords)) for row in Binv)
    return rep, k


def coset_representative(v: Sequence[int], u: Sequence[int]) -> Vector:
    return coset_decompose(v, u)[0]


def relation_matrix(presentation) -> Matrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    n = len(presentation.alphabet)
    rows = []
    for r in presentation.relators:
        row = [0] * n
        for i, s in r:
            row[i] += s
        rows.append(row)
    return rows


def abelianization_invariants(presentation) -> tuple[int, list[int]]:
    """(free rank, torsion invariants > 1 in divisibility order) of the abelianized group."""
    n = len(presentation.alphabet)
    M = relation_matrix(presentation)
    if not M:
        return n, []
    diag = [d for d in smith_normal_form(M).diagonal() if d]
    return n - len(diag), [d for d in diag if d > 1]


def matrix_to_json(A: Matrix) -> str:
    def enc(x):
        return x if -(2**63) <= x < 2**63 else str(x)

    return json.dumps([[enc(x) for x in row] for row in A])


def matrix_from_json(text: str) -> Matrix:
    return [[int(x) for x in row] for row in json.loads(text)]
