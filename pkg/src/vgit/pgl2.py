"""PGL2 acting diagonally on (P^1)^n and its torus model.

Chambers of the ample cone of ``(P^1)^n`` lying in a half-space ``H_S``
with ``|S| = 2`` are compared with the secondary-fan chambers of the torus
``(C*)^{n-1}`` acting on ``C^{2n-4}`` with weights ``e_i`` and
``e_i + e_{n-1}``.  Indices in this module are 1-based, as in ``O(a_1, ..., a_n)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .exact.arrangement import ChamberCell, arrangement_chambers
from .exact.cone import Cone, Membership, cone_contains, cone_from_inequalities
from .exact.linalg import dot, inverse, matmul, nullspace, primitive, rank
from .exact.polyhedron import Fan
from .toric import (SecondaryChamber, WeightConfiguration, interior_walls,
                    make_weight_configuration, secondary_chambers)


class NonpositiveWeight(ValueError):
    pass


class BadSubsetSize(ValueError):
    pass


class NTooSmall(ValueError):
    pass


class CountMismatch(RuntimeError):
    """Chamber counts on the two sides differ."""


class NoLinearMatching(RuntimeError):
    """No linear map identifies the two wall configurations."""


class Stability(str, Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class Linearization:
    n: int
    a: tuple[int, ...]

    @classmethod
    def of(cls, a: Sequence[int]) -> "Linearization":
        a = tuple(int(x) for x in a)
        return cls(len(a), a)

    @property
    def parity_ok(self) -> bool:
        """``O(a)`` carries a PGL2-linearization iff ``|a|`` is even."""
        return sum(self.a) % 2 == 0

    def in_ample_cone(self) -> bool:
        total = sum(self.a)
        return all(0 < x <= total - x for x in self.a)


@dataclass(frozen=True)
class WallSpec:
    n: int
    S: frozenset
    normal: tuple[int, ...]

    @classmethod
    def of(cls, n: int, subset: Iterable[int]) -> "WallSpec":
        s = frozenset(subset)
        return cls(n, s, tuple(1 if i in s else -1 for i in range(1, n + 1)))

    def value(self, a: Sequence) -> int:
        return dot(self.normal, a)


def sigma(subset: Iterable[int], a: Sequence) -> int:
    """``sum_{i in T} a_i - sum_{i not in T} a_i`` (1-based ``T``)."""
    t = set(subset)
    return sum(x if i + 1 in t else -x for i, x in enumerate(a))


@dataclass(frozen=True)
class CoincidenceProfile:
    """Which of the ``n`` points coincide: blocks of a set partition of ``1..n``."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "CoincidenceProfile":
        bl = tuple(sorted(tuple(sorted(b)) for b in blocks))
        flat = sorted(i for b in bl for i in b)
        n = len(flat)
        if flat != list(range(1, n + 1)):
            raise ValueError("blocks must partition 1..n")
        return cls(n, bl)

    def separates(self, i: int, j: int) -> bool:
        return not any(i in b and j in b for b in self.blocks)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)


def set_partitions(n: int) -> Iterator[CoincidenceProfile]:
    """All set partitions of ``1..n`` (Bell(n) of them)."""
    def rec(k, blocks):
        if k > n:
            yield CoincidenceProfile.of(blocks)
            return
        for b in range(len(blocks)):
            yield from rec(k + 1, blocks[:b] + [blocks[b] + [k]] + blocks[b + 1:])
        yield from rec(k + 1, blocks + [[k]])

    yield from rec(1, [])


def hm_classify(a: Linearization | Sequence[int], profile: CoincidenceProfile) -> Stability:
    """Hilbert-Mumford: compare the heaviest coincidence block with ``|a|/2``."""
    if not isinstance(a, Linearization):
        a = Linearization.of(a)
    if any(x <= 0 for x in a.a):
        raise NonpositiveWeight(f"weights must be positive: {a.a}")
    if profile.n != a.n:
        raise ValueError("profile and linearization sizes differ")
    total = sum(a.a)
    heaviest = max(sum(a.a[i - 1] for i in b) for b in profile.blocks)
    if 2 * heaviest < total:
        return Stability.STABLE
    if 2 * heaviest == total:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def hm_table(a: Sequence[int]) -> list[tuple[CoincidenceProfile, Stability]]:
    lin = Linearization.of(a)
    return [(p, hm_classify(lin, p)) for p in set_partitions(lin.n)]


def _ample_facets(n: int) -> list[tuple[int, ...]]:
    facets = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    facets += [tuple(-1 if i == j else 1 for j in range(n)) for i in range(n)]
    return facets


def effective_ample_cone(n: int) -> Cone:
    """Closure of ``{a : 0 < a_i <= sum_{j != i} a_j}`` (irredundant facets)."""
    if n < 1:
        raise ValueError("n must be positive")
    return cone_from_inequalities(_ample_facets(n), ambient_dim=n)


def _check_pair(n: int, s: Iterable[int]) -> frozenset:
    s = frozenset(int(x) for x in s)
    if len(s) != 2:
        raise BadSubsetSize(f"|S| must be 2, got {sorted(s)}")
    if not s <= set(range(1, n + 1)):
        raise BadSubsetSize(f"S must be a subset of 1..{n}")
    return s


def halfspace_region(n: int, s: Iterable[int]) -> Cone:
    """Closure of ``C^G(X) ∩ H_S``."""
    s = _check_pair(n, s)
    return cone_from_inequalities(_ample_facets(n) + [WallSpec.of(n, s).normal], ambient_dim=n)


def pgl2_walls(n: int) -> list[WallSpec]:
    """One wall ``Sigma_T = 0`` per pair ``{T, T^c}``, represented by ``T`` containing 1."""
    rest = range(2, n + 1)
    out = []
    for k in range(0, n):
        for sub in combinations(rest, k):
            t = frozenset((1,) + sub)
            if len(t) == n:
                continue
            out.append(WallSpec.of(n, t))
    return out


@dataclass(frozen=True)
class PGL2Chamber:
    sign_vector: tuple[int, ...]
    representative: tuple[int, ...]
    cell: ChamberCell = field(repr=False)

    @property
    def signs(self) -> str:
        return self.cell.signs


@dataclass(frozen=True)
class PGL2ChamberList:
    n: int
    S: frozenset
    walls: tuple[WallSpec, ...]
    region: Cone
    chambers: tuple[PGL2Chamber, ...]

    def __len__(self) -> int:
        return len(self.chambers)

    def __iter__(self):
        return iter(self.chambers)

    def __getitem__(self, k):
        return self.chambers[k]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "S": sorted(self.S),
            "walls": [sorted(w.S) for w in self.walls],
            "chambers": [{"sign_vector": c.signs, "representative": list(c.representative)}
                         for c in self.chambers],
        }


def _even_representative(v: Sequence[int]) -> tuple[int, ...]:
    g = primitive(v)
    return g if sum(g) % 2 == 0 else tuple(2 * x for x in g)


def pgl2_chambers_in_halfspace(n: int, s: Iterable[int]) -> PGL2ChamberList:
    """VGIT chambers of the ample cone inside ``H_S``.

    Representatives are integral with even coordinate sum, so each is an
    honest linearized bundle ``O(a)``.
    """
    if n < 3:
        raise NTooSmall("the ample cone is full-dimensional only for n >= 3")
    s = _check_pair(n, s)
    region = halfspace_region(n, s)
    # the region is pointed, so a hyperplane meets its interior iff it
    # separates two extreme rays
    def cuts(w):
        vals = [dot(w.normal, g) for g in region.generators]
        return any(v > 0 for v in vals) and any(v < 0 for v in vals)

    walls = [w for w in pgl2_walls(n) if cuts(w)]
    cells = arrangement_chambers([w.normal for w in walls], region)
    chambers = [PGL2Chamber(c.sign_vector, _even_representative(c.representative), c)
                for c in cells]
    return PGL2ChamberList(n, s, tuple(walls), region, tuple(chambers))


def lifted_torus_action(n: int) -> WeightConfiguration:
    """Weights of ``(t, s).(x_i, y_i) = (t_i x_i, s t_i y_i)``, ordered ``x_1, y_1, x_2, ...``."""
    if n < 4:
        raise NTooSmall("the torus model needs n >= 4")
    d = n - 1
    beta = []
    for i in range(n - 2):
        e = [0] * d
        e[i] = 1
        beta.append(tuple(e))
        e[d - 1] = 1
        beta.append(tuple(e))
    return make_weight_configuration(beta)


def coordinate_names(n: int) -> list[str]:
    return [f"{v}{i}" for i in range(1, n - 1) for v in ("x", "y")]


# ---------------------------------------------------------------------------
# chamber bijection


@dataclass(frozen=True)
class LinearMatching:
    """``matrix`` maps ``Q^n -> Q^{n-1}``, kills ``e_S`` and carries walls to walls."""

    matrix: tuple[tuple[int, ...], ...]
    wall_map: tuple[tuple[int, int], ...]
    chamber_pairs: tuple[tuple[int, int], ...]

    def apply(self, a: Sequence) -> tuple:
        return tuple(dot(row, a) for row in self.matrix)


@dataclass(frozen=True)
class BijectionReport:
    n: int
    S: frozenset
    pgl2_chambers: PGL2ChamberList
    gkz_chambers: tuple[SecondaryChamber, ...]
    counts_match: bool
    matching: LinearMatching | None
    maps_found: int
    quotient_fans: tuple[Fan, ...]

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "S": sorted(self.S),
            "pgl2_count": len(self.pgl2_chambers),
            "gkz_count": len(self.gkz_chambers),
            "counts_match": self.counts_match,
            "maps_found": self.maps_found,
            "matched": self.matching is not None,
        }
        if self.matching is not None:
            m = self.matching
            out["linear_map"] = [list(r) for r in m.matrix]
            out["pairs"] = [
                {"pgl2": list(self.pgl2_chambers[i].representative),
                 "pgl2_sign_vector": self.pgl2_chambers[i].signs,
                 "gkz": list(self.gkz_chambers[j].representative),
                 "gkz_sign_vector": self.gkz_chambers[j].signs,
                 "quotient_fan": self.gkz_chambers[j].data.fan.to_json()}
                for i, j in m.chamber_pairs]
        return out


def _quotient_basis(n: int, s: frozenset) -> list[tuple[int, ...]]:
    """Basis of the functionals vanishing on ``e_S``."""
    e_s = [tuple(1 if i + 1 in s else 0 for i in range(n))]
    return nullspace(e_s, n)


def _proportional(u: Sequence, v: Sequence) -> Fraction | None:
    """``c`` with ``u = c v``, or ``None``."""
    k = next((i for i, x in enumerate(v) if x != 0), None)
    if k is None:
        return None
    c = Fraction(u[k]) / v[k]
    if all(Fraction(x) == c * y for x, y in zip(u, v)):
        return c
    return None


def _candidate_maps(src_facets, src_walls, dst_facets, dst_walls, n):
    """Yield ``L`` (rows over ``Q^n``) with ``g ∘ L`` a positive multiple of the
    assigned PGL2 facet for every GKZ facet ``g`` and walls sent to walls.

    ``dst_*`` are GKZ functionals on ``Q^{n-1}``; ``src_*`` are PGL2
    functionals on ``Q^n`` vanishing on ``e_S``.
    """
    d = n - 1
    basis = None
    for sub in combinations(range(len(dst_facets)), d):
        if rank([dst_facets[i] for i in sub]) == d:
            basis = list(sub)
            break
    if basis is None:
        return
    extra = [i for i in range(len(dst_facets)) if i not in basis]
    f_rows = [dst_facets[i] for i in basis]
    f_inv_t = inverse([list(c) for c in zip(*f_rows)])
    # dst_facets[j] = sum_k mu[j][k] * dst_facets[basis[k]]
    mu = {j: [sum(f_inv_t[k][c] * dst_facets[j][c] for c in range(d)) for k in range(d)]
          for j in extra}
    f_inv = inverse(f_rows)
    order = basis + extra
    for perm in permutations(range(len(src_facets))):
        h = {order[k]: src_facets[perm[k]] for k in range(len(order))}
        # unknown positive scales lam[k] for k in order; homogeneous linear system
        rows = []
        nvar = len(order)
        for j in extra:
            for c in range(n):
                row = [Fraction(0)] * nvar
                for k in range(d):
                    row[k] += mu[j][k] * h[basis[k]][c]
                row[order.index(j)] -= h[j][c]
                rows.append(row)
        null = nullspace(rows, nvar) if rows else [tuple([1] * nvar)]
        if len(null) != 1:
            continue
        lam = null[0]
        if all(x < 0 for x in lam):
            lam = tuple(-x for x in lam)
        if not all(x > 0 for x in lam):
            continue
        h_scaled = [[lam[k] * x for x in h[basis[k]]] for k in range(d)]
        mat = matmul(f_inv, h_scaled)
        mat = [list(primitive([x for row in mat for x in row]))[i * n:(i + 1) * n] for i in range(d)]
        wall_map = []
        used = set()
        ok = True
        for gi, g in enumerate(dst_walls):
            image = [sum(g[k] * mat[k][c] for k in range(d)) for c in range(n)]
            hit = None
            for wi, w in enumerate(src_walls):
                if wi not in used and _proportional(image, w) is not None:
                    hit = wi
                    break
            if hit is None:
                ok = False
                break
            used.add(hit)
            wall_map.append((hit, gi))
        if ok and len(used) == len(src_walls):
            yield tuple(tuple(r) for r in mat), tuple(sorted(wall_map))


def _match_chambers(mat, pgl2: PGL2ChamberList, gkz, w: WeightConfiguration, walls):
    by_signs = {cell.sign_vector: j for j, g in enumerate(gkz) for cell in g.cells}
    pairs = []
    for i, ch in enumerate(pgl2):
        image = tuple(dot(row, ch.representative) for row in mat)
        if cone_contains(w.c_beta, image) is not Membership.INTERIOR:
            return None
        values = [dot(h, image) for h in walls]
        if any(v == 0 for v in values):
            return None
        j = by_signs.get(tuple(1 if v > 0 else -1 for v in values))
        if j is None:
            return None
        pairs.append((i, j))
    if len({j for _, j in pairs}) != len(gkz) or len(pairs) != len(gkz):
        return None
    return tuple(pairs)


def verify_chamber_bijection(n: int, s: Iterable[int], map_fn=map, strict: bool = True) -> BijectionReport:
    """Enumerate both chamber sets, compare counts, and search for a linear map.

    The map is found, not assumed: every assignment of the quotient region's
    facets to facets of the weight cone is solved for positive scales, and
    the candidates sending interior walls bijectively to interior walls and
    chambers bijectively to chambers are kept.  ``maps_found`` counts them.
    """
    s = _check_pair(n, s)
    pgl2 = pgl2_chambers_in_halfspace(n, s)
    w = lifted_torus_action(n)
    gkz = tuple(secondary_chambers(w, map_fn=map_fn))
    counts_match = len(pgl2) == len(gkz)
    if not counts_match and strict:
        raise CountMismatch(f"{len(pgl2)} PGL2 chambers vs {len(gkz)} secondary chambers")

    e_s = tuple(1 if i + 1 in s else 0 for i in range(n))
    src_facets = [f for f in pgl2.region.facet_normals if dot(f, e_s) == 0]
    src_walls = [wl.normal for k, wl in enumerate(pgl2.walls)
                 if len({c.sign_vector[k] for c in pgl2}) == 2]
    dst_facets = list(w.c_beta.facet_normals)
    dst_walls = interior_walls(w)

    first = None
    found = 0
    if counts_match and len(src_facets) == len(dst_facets) and len(src_walls) == len(dst_walls):
        for mat, wall_map in _candidate_maps(src_facets, src_walls, dst_facets, dst_walls, n):
            pairs = _match_chambers(mat, pgl2, gkz, w, dst_walls)
            if pairs is None:
                continue
            found += 1
            if first is None:
                first = LinearMatching(mat, wall_map, pairs)
    fans = tuple(gkz[j].data.fan for _, j in first.chamber_pairs) if first else ()
    return BijectionReport(n, s, pgl2, gkz, counts_match, first, found, fans)


def twist_delta(t: Iterable[int], s: Iterable[int], a: Sequence[int], m: int) -> int:
    """``Sigma_T(a + m e_S) - Sigma_T(a)``."""
    s = set(s)
    twisted = [x + (m if i + 1 in s else 0) for i, x in enumerate(a)]
    return sigma(t, twisted) - sigma(t, a)


def twist_invariance_check(n: int, s: Iterable[int], a: Sequence[int], m: int) -> bool:
    """Twisting by ``m e_S`` shifts ``Sigma_T`` by ``2m``, ``0`` or ``-2m``.

    The three cases are ``T ⊇ S``, ``|T ∩ S| = 1`` and ``T ∩ S = ∅``; checked
    over every ``T``.
    """
    s = _check_pair(n, s)
    if len(a) != n:
        raise ValueError("a has the wrong length")
    for k in range(n + 1):
        for t in combinations(range(1, n + 1), k):
            meet = len(s & set(t))
            if twist_delta(t, s, a, m) != 2 * m * (meet - 1):
                return False
    return True
