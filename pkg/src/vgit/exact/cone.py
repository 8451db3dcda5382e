"""Rational polyhedral cones with both representations, via double description.

A :class:`Cone` always carries

* ``generators`` -- extreme rays of the pointed part, projected onto the
  orthogonal complement of the lineality space,
* ``lineality_basis`` -- canonical basis of the largest contained subspace,
* ``facet_normals`` -- inner facet normals, projected into the linear span,
* ``equations`` -- canonical basis of the orthogonal complement of the span,

so that the cone equals ``cone(generators) + span(lineality_basis)`` and also
``{x : <f, x> >= 0 for all facets, <e, x> = 0 for all equations}``.
All vectors are primitive integer tuples, stored sorted.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .linalg import canonical_line, dot, primitive, project_out, rank, rref


class Membership(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class DDState:
    """Incremental double-description state for ``{x : <a_j, x> >= 0}``.

    Each inequality added refines the current V-representation by one
    standard DD step (adjacency by rank of the common tight set).  States
    are never mutated after construction; :meth:`add` returns a new one.
    """

    __slots__ = ("dim", "normals", "lineality", "rays", "tight")

    def __init__(self, dim, normals=(), lineality=None, rays=(), tight=()):
        self.dim = dim
        self.normals = tuple(normals)
        if lineality is None:
            lineality = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
        self.lineality = tuple(lineality)
        self.rays = tuple(rays)
        self.tight = tuple(tight)

    @classmethod
    def from_inequalities(cls, dim: int, normals: Iterable[Sequence[int]]) -> "DDState":
        state = cls(dim)
        for a in normals:
            state = state.add(a)
        return state

    def add(self, a: Sequence[int]) -> "DDState":
        a = primitive(a)
        if len(a) != self.dim:
            raise ValueError("dimension mismatch")
        if not any(a):
            return self
        idx = len(self.normals)
        normals = self.normals + (a,)
        # a line not orthogonal to a: it becomes a ray
        for k, l in enumerate(self.lineality):
            al = dot(a, l)
            if al == 0:
                continue
            if al < 0:
                l, al = tuple(-x for x in l), -al
            lineality = tuple(
                primitive(tuple(al * x - dot(a, l2) * y for x, y in zip(l2, l)))
                for j, l2 in enumerate(self.lineality) if j != k)
            rays, tight = [], []
            for ray, z in zip(self.rays, self.tight):
                ar = dot(a, ray)
                rays.append(primitive(tuple(al * x - ar * y for x, y in zip(ray, l))))
                tight.append(z | {idx})
            rays.append(l)
            tight.append(frozenset(range(idx)))
            return DDState(self.dim, normals, lineality, rays, tight)

        values = [dot(a, ray) for ray in self.rays]
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]
        rays = [self.rays[i] for i in pos]
        tight = [self.tight[i] for i in pos]
        for i in zero:
            rays.append(self.rays[i])
            tight.append(self.tight[i] | {idx})
        if neg:
            k = self.dim - len(self.lineality)
            for i in pos:
                for j in neg:
                    common = self.tight[i] & self.tight[j]
                    if len(common) < k - 2:
                        continue
                    if rank([self.normals[t] for t in common]) != k - 2:
                        continue
                    vi, vj = values[i], -values[j]
                    new = primitive(tuple(vj * x + vi * y
                                          for x, y in zip(self.rays[i], self.rays[j])))
                    rays.append(new)
                    tight.append(common | {idx})
        return DDState(self.dim, normals, self.lineality, rays, tight)

    def canonical(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """Canonical ``(rays, lineality_basis)``."""
        lin = _canonical_subspace(self.lineality, self.dim)
        rays = sorted({primitive(project_out(r, lin)) for r in self.rays} - {(0,) * self.dim})
        return rays, lin

    def is_full_dimensional(self) -> bool:
        return len(self.lineality) + rank(self.rays) == self.dim

    def interior_point(self) -> tuple[int, ...]:
        """Sum of the canonical extreme rays; strictly interior when full-dimensional."""
        rays, _ = self.canonical()
        return tuple(sum(col) for col in zip(*rays)) if rays else (0,) * self.dim


def _canonical_subspace(vectors: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    red, _ = rref(vectors)
    return sorted(canonical_line(row) for row in red)


def _orth_complement(vectors: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    from .linalg import nullspace

    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return _canonical_subspace([tuple(int(i == j) for j in range(dim)) for i in range(dim)], dim)
    return _canonical_subspace(nullspace(vectors, dim), dim)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]
    facet_normals: tuple[tuple[int, ...], ...]
    lineality_basis: tuple[tuple[int, ...], ...]
    equations: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def is_full_dimensional(self) -> bool:
        return not self.equations

    def is_strongly_convex(self) -> bool:
        return not self.lineality_basis

    def contains(self, x: Sequence) -> bool:
        return cone_contains(self, x) is not Membership.OUTSIDE

    def interior_point(self) -> tuple[int, ...]:
        """Integral point of the relative interior."""
        if not self.generators:
            return (0,) * self.ambient_dim
        return tuple(sum(col) for col in zip(*self.generators))

    def __contains__(self, x) -> bool:
        return self.contains(x)


def _cone_from_vrep(dim, rays, lineality) -> Cone:
    # dual cone: y with <y, g> >= 0 on rays and both signs of lineality
    dual = DDState.from_inequalities(
        dim, list(rays) + list(lineality) + [tuple(-x for x in l) for l in lineality])
    facets, equations = dual.canonical()
    return Cone(dim, tuple(rays), tuple(facets), tuple(lineality), tuple(equations))


def cone_from_generators(gens: Iterable[Sequence], ambient_dim: int | None = None) -> Cone:
    """The cone spanned by ``gens``; an empty list gives the origin."""
    gens = [tuple(g) for g in gens]
    if ambient_dim is None:
        if not gens:
            raise ValueError("ambient_dim required when there are no generators")
        ambient_dim = len(gens[0])
    if any(len(g) != ambient_dim for g in gens):
        raise ValueError("generators of differing dimension")
    gens = [primitive(g) for g in gens if any(g)]
    dual = DDState.from_inequalities(ambient_dim, gens)
    facets, equations = dual.canonical()
    return cone_from_inequalities(facets, equations, ambient_dim)


def cone_from_inequalities(normals: Iterable[Sequence], equations: Iterable[Sequence] = (),
                           ambient_dim: int | None = None) -> Cone:
    """The cone ``{x : <f, x> >= 0, <e, x> = 0}``."""
    normals = [tuple(f) for f in normals]
    equations = [tuple(e) for e in equations]
    if ambient_dim is None:
        if not normals and not equations:
            raise ValueError("ambient_dim required when there are no inequalities")
        ambient_dim = len((normals or equations)[0])
    rows = normals + equations + [tuple(-x for x in e) for e in equations]
    state = DDState.from_inequalities(ambient_dim, rows)
    rays, lin = state.canonical()
    return _cone_from_vrep(ambient_dim, rays, lin)


def cone_from_state(state: DDState) -> Cone:
    rays, lin = state.canonical()
    return _cone_from_vrep(state.dim, rays, lin)


def cone_contains(c: Cone, x: Sequence) -> Membership:
    """Classify ``x`` against ``c`` (interior is relative to the span of ``c``)."""
    if len(x) != c.ambient_dim:
        raise ValueError("dimension mismatch")
    if any(dot(e, x) != 0 for e in c.equations):
        return Membership.OUTSIDE
    values = [dot(f, x) for f in c.facet_normals]
    if any(v < 0 for v in values):
        return Membership.OUTSIDE
    if any(v == 0 for v in values):
        return Membership.BOUNDARY
    return Membership.INTERIOR


def is_strongly_convex(c: Cone) -> bool:
    return c.is_strongly_convex()
