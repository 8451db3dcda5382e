"""Polyhedra ``{m : <n_i, m> >= -b_i}``, their vertices, and normal fans."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .cone import Cone, cone_from_generators, cone_from_inequalities
from .linalg import dot, rank, rref, solve


class Infeasible(ValueError):
    """The inequality system has no solution."""


class NotPointed(ValueError):
    """The polyhedron contains a line, so it has no vertices."""


class DegeneratePolyhedron(ValueError):
    """The polyhedron is not full-dimensional in its ambient space."""


@dataclass(frozen=True)
class Polyhedron:
    ambient_dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    recession_cone: Cone
    active: tuple[frozenset, ...] = field(repr=False)

    def is_bounded(self) -> bool:
        return not self.recession_cone.generators and not self.recession_cone.lineality_basis

    @cached_property
    def dim(self) -> int:
        v0 = self.vertices[0]
        diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        return rank(diffs + list(self.recession_cone.generators))

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def satisfies(self, m: Sequence) -> bool:
        return all(dot(nrm, m) >= -b for nrm, b in self.inequalities)

    def never_active(self) -> frozenset:
        """Indices whose hyperplane ``<n_i, m> = -b_i`` misses the polyhedron."""
        touched = frozenset().union(*self.active)
        return frozenset(range(len(self.inequalities))) - touched


def _vertices(dim, ineqs):
    normals = [n for n, _ in ineqs]
    found = {}
    for idx in combinations(range(len(ineqs)), dim):
        rows = [normals[i] for i in idx]
        sol = solve(rows, [-ineqs[i][1] for i in idx])
        if sol is None:
            continue
        if sol in found:
            continue
        if all(dot(n, sol) >= -b for n, b in ineqs):
            found[sol] = frozenset(i for i, (n, b) in enumerate(ineqs) if dot(n, sol) == -b)
    return found


def polyhedron_solve(ineqs: Sequence[tuple[Sequence[int], int]]) -> Polyhedron:
    """Vertices and recession cone of ``{m : <normal, m> >= -offset}``.

    Vertices come from exhaustive ``d``-subsets of the inequalities.  Raises
    :class:`Infeasible` for an empty system and :class:`NotPointed` when the
    normals do not span the ambient space of a nonempty system.
    """
    if not ineqs:
        raise ValueError("at least one inequality is required")
    ineqs = tuple((tuple(int(x) for x in n), int(b)) for n, b in ineqs)
    dim = len(ineqs[0][0])
    normals = [n for n, _ in ineqs]
    if dim == 0:
        if any(b < 0 for _, b in ineqs):
            raise Infeasible("0 >= -b fails")
        rec = cone_from_generators([], 0)
        act = frozenset(i for i, (_, b) in enumerate(ineqs) if b == 0)
        return Polyhedron(0, ineqs, ((),), rec, (act,))
    k = rank(normals)
    if k < dim:
        # feasibility on the row space of the normals decides Infeasible vs NotPointed
        basis, _ = rref(normals)
        reduced = [(tuple(dot(n, b) for b in basis), off) for n, off in ineqs]
        if _vertices(k, _scaled(reduced)):
            raise NotPointed("polyhedron contains a line")
        raise Infeasible("no point satisfies the inequalities")
    found = _vertices(dim, ineqs)
    if not found:
        raise Infeasible("no point satisfies the inequalities")
    rec = cone_from_inequalities(normals, ambient_dim=dim)
    verts = sorted(found)
    return Polyhedron(dim, ineqs, tuple(verts), rec, tuple(found[v] for v in verts))


def _scaled(ineqs):
    from .linalg import lcm

    out = []
    for n, b in ineqs:
        den = 1
        for x in n:
            den = lcm(den, Fraction(x).denominator)
        out.append((tuple(int(Fraction(x) * den) for x in n), b * den))
    return out


@dataclass(frozen=True)
class Fan:
    """A fan given by rays and maximal cones (0-based ray index sets).

    ``lineality`` is shared by every cone.  It is empty for honest fans and
    nonempty only for the generalized normal fan of a polyhedron that is not
    full-dimensional.
    """

    ambient_dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...] = ()

    def cone(self, k: int) -> Cone:
        lin = list(self.lineality)
        gens = [self.rays[i] for i in self.max_cones[k]] + lin + [tuple(-x for x in l) for l in lin]
        return cone_from_generators(gens, self.ambient_dim)

    @cached_property
    def cones(self) -> tuple[Cone, ...]:
        return tuple(self.cone(k) for k in range(len(self.max_cones)))

    def is_complete_at(self, x: Sequence) -> bool:
        return any(c.contains(x) for c in self.cones)

    def to_json(self) -> dict:
        out = {"rays": [list(r) for r in self.rays], "max_cones": [list(c) for c in self.max_cones]}
        if self.lineality:
            out["lineality"] = [list(l) for l in self.lineality]
        return out


def normal_fan(p: Polyhedron, generalized: bool = False) -> Fan:
    """Inner normal fan: one maximal cone per vertex, spanned by its active normals.

    With ``generalized=True`` a lower-dimensional ``p`` is accepted and every
    cone then contains the orthogonal complement of ``p``'s affine hull.
    """
    if not p.vertices:
        raise NotPointed("polyhedron has no vertices")
    if not generalized and not p.is_full_dimensional():
        raise DegeneratePolyhedron(f"polyhedron has dimension {p.dim} < {p.ambient_dim}")
    normals = [n for n, _ in p.inequalities]
    cones = []
    for act in p.active:
        cones.append(cone_from_generators([normals[i] for i in sorted(act)], p.ambient_dim))
    lineality = cones[0].lineality_basis
    rays = sorted({g for c in cones for g in c.generators})
    index = {r: i for i, r in enumerate(rays)}
    max_cones = sorted(tuple(sorted(index[g] for g in c.generators)) for c in cones)
    return Fan(p.ambient_dim, tuple(rays), tuple(max_cones), tuple(lineality))
