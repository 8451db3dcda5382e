"""Exact linear algebra over the rationals.

Vectors are plain tuples of ``int`` or :class:`fractions.Fraction`; matrices
are sequences of row tuples.  Nothing here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple
Matrix = Sequence[Sequence]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(abs(a), abs(b))


def primitive(v: Iterable) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray.

    The zero vector is returned unchanged (as integers).
    """
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def canonical_line(v: Iterable) -> tuple[int, ...]:
    """Primitive representative of the line through ``v``, first nonzero entry positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    rows = [r for r in rows if any(x != 0 for x in r)]
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of ``{x : A x = 0}`` as primitive integer vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(rows: Matrix, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a square nonsingular system exactly; ``None`` if singular."""
    n = len(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if len(pivots) != n or pivots[-1] >= n:
        return None
    return tuple(row[-1] for row in red)


def solve_any(rows: Matrix, rhs: Sequence, ncols: int) -> tuple[Fraction, ...] | None:
    """Some solution of a possibly non-square system, or ``None`` if inconsistent."""
    if not rows:
        return tuple(Fraction(0) for _ in range(ncols))
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


def inverse(rows: Matrix) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    if len(pivots) != n or pivots[-1] >= n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def transpose(a: Matrix) -> list[list]:
    return [list(col) for col in zip(*a)]


def det(rows: Matrix) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def project_out(v: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``."""
    if not basis:
        return tuple(Fraction(x) for x in v)
    # Gram system G c = B v
    gram = [[dot(b1, b2) for b2 in basis] for b1 in basis]
    rhs = [dot(b, v) for b in basis]
    c = solve(gram, rhs)
    if c is None:
        raise ValueError("projection basis is not linearly independent")
    return tuple(Fraction(x) - sum(ci * b[k] for ci, b in zip(c, basis))
                 for k, x in enumerate(v))
