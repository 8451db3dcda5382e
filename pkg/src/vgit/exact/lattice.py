"""Integer lattice computations: Hermite normal form and saturated kernels."""
from __future__ import annotations

from typing import Sequence

IntMatrix = list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(a: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U @ A``.  Pivots of
    ``H`` are positive, entries above a pivot lie in ``[0, pivot)``, and
    zero rows are at the bottom.

    Pivot rule: within a column the row holding the smallest nonzero
    absolute value is used, ties going to the topmost row.

    >>> hnf([[2, 4], [1, 3]])[0]
    [[1, 1], [0, 2]]
    """
    if not a or not a[0]:
        raise ValueError("hnf needs a nonempty matrix")
    h = [[int(x) for x in row] for row in a]
    m, ncols = len(h), len(h[0])
    u = _identity(m)
    r = 0
    pivots: list[tuple[int, int]] = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(h[i][c]), i))
            h[r], h[p] = h[p], h[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if all(h[i][c] == 0 for i in range(r, m)):
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        pivots.append((r, c))
        r += 1
    return h, u


def is_hnf(h: Sequence[Sequence[int]]) -> bool:
    last = -1
    zero_seen = False
    for i, row in enumerate(h):
        p = next((c for c, x in enumerate(row) if x != 0), None)
        if p is None:
            zero_seen = True
            continue
        if zero_seen or p <= last or row[p] <= 0:
            return False
        if any(not 0 <= h[k][p] < row[p] for k in range(i)):
            return False
        last = p
    return True


def kernel_lattice(gamma: Sequence[Sequence[int]]) -> tuple[IntMatrix, list[tuple[int, ...]]]:
    """Saturated integer kernel of ``gamma`` (an ``n x r`` matrix).

    Returns ``(basis, nu)``: ``basis`` has one row per kernel generator, in
    Hermite normal form so the basis is canonical; ``nu[i]`` is the i-th
    coordinate functional of the inclusion ``ker -> Z^r`` written in that
    basis, i.e. column ``i`` of ``basis``.
    """
    n = len(gamma)
    r = len(gamma[0])
    transposed = [[gamma[k][i] for k in range(n)] for i in range(r)]
    h, u = hnf(transposed)
    rows = [u[i] for i in range(r) if not any(h[i])]
    if rows:
        rows = [row for row in hnf(rows)[0] if any(row)]
    nu = [tuple(row[i] for row in rows) for i in range(r)]
    return rows, nu


def integral_solution(gamma: Sequence[Sequence[int]], chi: Sequence[int]) -> tuple[int, ...] | None:
    """An integral ``a`` with ``gamma @ a = chi``, or ``None`` if none exists.

    Computed from the HNF of ``gamma^T``: if ``U gamma^T = H`` then
    ``a^T = y^T U`` where ``y^T H = chi^T`` is solved by forward substitution.
    """
    n = len(gamma)
    r = len(gamma[0])
    transposed = [[gamma[k][i] for k in range(n)] for i in range(r)]
    h, u = hnf(transposed)
    y = [0] * r
    residual = list(chi)
    for i in range(r):
        p = next((c for c, x in enumerate(h[i]) if x != 0), None)
        if p is None:
            break
        if residual[p] % h[i][p]:
            return None
        y[i] = residual[p] // h[i][p]
        residual = [x - y[i] * hv for x, hv in zip(residual, h[i])]
    if any(residual):
        return None
    return tuple(sum(y[i] * u[i][j] for i in range(r)) for j in range(r))
