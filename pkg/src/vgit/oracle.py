"""Slow, independent cross-checks.

Nothing in here uses double description.  Cone membership goes through
Caratheodory (solve on every linearly independent subset), facets and rays
through exhaustive subset enumeration, and chamber counts through seeded
random sampling.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

from .exact.linalg import canonical_line, dot, nullspace, primitive, rank, solve_any


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    samples_per_cell: int = 200
    denominator_bound: int = 10**6
    max_samples: int = 200_000


def in_cone(gens: Sequence[Sequence[int]], x: Sequence) -> bool:
    """``x`` is a nonnegative combination of ``gens`` (Caratheodory search)."""
    x = tuple(Fraction(v) for v in x)
    if not any(x):
        return True
    gens = [tuple(g) for g in gens if any(g)]
    dim = len(x)
    for k in range(1, min(len(gens), dim) + 1):
        for sub in combinations(gens, k):
            if rank(sub) != k:
                continue
            # columns are the generators
            rows = [[g[c] for g in sub] for c in range(dim)]
            lam = solve_any(rows, x, k)
            if lam is None:
                continue
            if all(v >= 0 for v in lam) and all(
                    sum(l * g[c] for l, g in zip(lam, sub)) == x[c] for c in range(dim)):
                return True
    return False


def brute_force_facets(gens: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Inner facet normals of a full-dimensional ``cone(gens)`` by subset search."""
    gens = [tuple(g) for g in gens if any(g)]
    out = set()
    for sub in combinations(gens, dim - 1):
        if rank(sub) != dim - 1:
            continue
        (h,) = nullspace(sub, dim)
        vals = [dot(h, g) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(primitive(h))
        if all(v <= 0 for v in vals):
            out.add(primitive(tuple(-x for x in h)))
    return sorted(out)


def brute_force_rays(normals: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of a pointed ``{x : <f, x> >= 0}`` by subset search."""
    normals = [tuple(f) for f in normals if any(f)]
    out = set()
    for sub in combinations(normals, dim - 1):
        if rank(sub) != dim - 1:
            continue
        (v,) = nullspace(sub, dim)
        for s in (1, -1):
            cand = tuple(s * x for x in v)
            if all(dot(f, cand) >= 0 for f in normals):
                out.add(primitive(cand))
    return sorted(out)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sample_chamber_count(walls: Sequence[Sequence[int]], region: Sequence[Sequence[int]],
                         cfg: SampleConfig = SampleConfig(), dim: int | None = None) -> int:
    """Number of distinct strict sign vectors hit by random interior points.

    ``region`` is the list of inner facet normals of a pointed full-dimensional
    cone; an empty list means all of ``R^dim``.  Points are positive combinations of its extreme rays; draws
    alternate between uniform coefficients (cells near the barycenter) and
    log-uniform ones (thin cells near faces).  The
    number of draws is ``samples_per_cell`` times the general-position bound
    on the number of cells, capped at ``max_samples``.
    """
    walls = [tuple(w) for w in walls]
    region = [tuple(f) for f in region]
    if region:
        dim = len(region[0])
        rays = brute_force_rays(region, dim)
    else:
        if dim is None:
            raise ValueError("dim is required for the whole space")
        rays = [tuple(s * int(i == k) for k in range(dim)) for i in range(dim) for s in (1, -1)]
    if rank(rays) < dim:
        raise ValueError("region must be full-dimensional and pointed")
    m = len(walls)
    bound = 2 * sum(_binom(m - 1, k) for k in range(dim)) if m else 1
    draws = min(cfg.samples_per_cell * bound, cfg.max_samples)
    rng = random.Random(cfg.seed)
    seen = set()
    top = cfg.denominator_bound
    for k in range(draws):
        if k % 2:
            lam = [1 + int(top ** rng.random()) for _ in rays]
        else:
            lam = [rng.randint(1, top) for _ in rays]
        x = [sum(l * r[c] for l, r in zip(lam, rays)) for c in range(dim)]
        if not all(dot(f, x) > 0 for f in region):
            continue
        signs = tuple(_sign(dot(w, x)) for w in walls)
        if 0 in signs:
            continue
        seen.add(signs)
    return len(seen)


def _binom(a: int, b: int) -> int:
    from math import comb

    return comb(a, b) if 0 <= b <= a else 0


def brute_force_ss_supports(w, chi: Sequence[int]) -> set[frozenset]:
    """All supports ``I`` with ``chi`` in ``cone(beta_i : i in I)``."""
    r = w.r
    if r > 16:
        raise TooLarge(f"r = {r} > 16")
    beta = w.beta
    witnesses = []
    chi = tuple(chi)
    if not any(chi):
        witnesses.append(frozenset())
    else:
        for k in range(1, min(r, w.n) + 1):
            for sub in combinations(range(r), k):
                if in_cone([beta[i] for i in sub], chi) and rank([beta[i] for i in sub]) == k:
                    witnesses.append(frozenset(sub))
    out = set()
    for bits in product((0, 1), repeat=r):
        support = frozenset(i for i in range(r) if bits[i])
        if any(j <= support for j in witnesses):
            out.add(support)
    return out


def fan_equal_labeled(f1, f2, unimodular: bool = False) -> bool:
    """Same rays and the same maximal cones, after reindexing rays.

    With ``unimodular=True`` (ambient dimension at most 3) also accept fans
    related by an integral matrix of determinant ``±1``.
    """
    if f1.ambient_dim != f2.ambient_dim:
        return False

    def shape(f):
        cones = {frozenset(f.rays[i] for i in c) for c in f.max_cones}
        lin = {canonical_line(v) for v in f.lineality}
        return set(f.rays), cones, lin

    if shape(f1) == shape(f2):
        return True
    if not unimodular:
        return False
    if f1.ambient_dim > 3:
        raise TooLarge("unimodular search is limited to dimension 3")
    return _unimodular_equivalent(f1, f2)


def _unimodular_equivalent(f1, f2) -> bool:
    d = f1.ambient_dim
    if len(f1.rays) != len(f2.rays) or len(f1.max_cones) != len(f2.max_cones):
        return False
    if f1.lineality or f2.lineality:
        return False
    src = None
    for sub in combinations(range(len(f1.rays)), d):
        if rank([f1.rays[i] for i in sub]) == d:
            src = sub
            break
    if src is None:
        return False
    from .exact.linalg import det, inverse, matmul

    a = [list(f1.rays[i]) for i in src]
    a_inv = inverse(a)
    target_cones = {frozenset(f2.rays[i] for i in c) for c in f2.max_cones}
    rays2 = set(f2.rays)
    for img in permutations(range(len(f2.rays)), d):
        b = [list(f2.rays[i]) for i in img]
        # row vectors: x -> x U with a U = b
        u = matmul(a_inv, b)
        if any(Fraction(x).denominator != 1 for row in u for x in row):
            continue
        if abs(det(u)) != 1:
            continue
        mapped = {tuple(int(sum(Fraction(r[k]) * u[k][c] for k in range(d))) for c in range(d))
                  : r for r in f1.rays}
        if set(mapped) != rays2:
            continue
        cones = {frozenset(next(m for m, r in mapped.items() if r == f1.rays[i]) for i in c)
                 for c in f1.max_cones}
        if cones == target_cones:
            return True
    return False
