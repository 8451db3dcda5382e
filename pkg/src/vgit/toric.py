"""Variation of GIT for a torus acting linearly on affine space.

A diagonal action of ``(C*)^n`` on ``C^r`` is encoded by its weights
``beta_1, ..., beta_r`` in ``Z^n``.  For a character ``chi`` in the weight
cone this module builds the polyhedron ``P_a``, the quotient fan (its
normal fan), the never-active index set and the square-free irrelevant
ideal whose complement is the semistable locus, and it enumerates the
chambers of the secondary fan.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact.arrangement import ChamberCell, arrangement_chambers
from .exact.cone import Cone, Membership, cone_contains, cone_from_generators
from .exact.lattice import integral_solution, kernel_lattice
from .exact.linalg import canonical_line, dot, nullspace, rank
from .exact.polyhedron import DegeneratePolyhedron, Fan, Polyhedron, normal_fan, polyhedron_solve


class NotSurjective(ValueError):
    """The weight matrix does not map Z^r onto Z^n (action not faithful)."""


class EmptySemistableLocus(ValueError):
    """The character lies outside the weight cone."""


class InconsistentChamberIdentity(RuntimeError):
    """Fan comparison and ideal comparison disagree; this is a bug."""


@dataclass(frozen=True)
class WeightConfiguration:
    n: int
    r: int
    beta: tuple[tuple[int, ...], ...]
    m_basis: tuple[tuple[int, ...], ...]
    nu: tuple[tuple[int, ...], ...]
    c_beta: Cone

    @property
    def gamma(self) -> list[list[int]]:
        """The ``n x r`` matrix with columns ``beta_i``."""
        return [[b[k] for b in self.beta] for k in range(self.n)]

    @property
    def kernel_rank(self) -> int:
        return self.r - self.n

    def apply(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(ai * b[k] for ai, b in zip(a, self.beta)) for k in range(self.n))


def make_weight_configuration(beta: Iterable[Sequence[int]]) -> WeightConfiguration:
    beta = tuple(tuple(int(x) for x in b) for b in beta)
    if not beta:
        raise ValueError("need at least one weight")
    n = len(beta[0])
    if n == 0 or any(len(b) != n for b in beta):
        raise ValueError("weights must share a positive dimension")
    r = len(beta)
    if r < n:
        raise NotSurjective(f"{r} weights cannot span Z^{n}")
    gamma = [[b[k] for b in beta] for k in range(n)]
    for k in range(n):
        target = tuple(int(i == k) for i in range(n))
        if integral_solution(gamma, target) is None:
            raise NotSurjective(f"e_{k} is not in the image of gamma")
    m_basis, nu = kernel_lattice(gamma)
    c_beta = cone_from_generators(beta, n)
    return WeightConfiguration(n, r, beta, tuple(tuple(row) for row in m_basis), tuple(nu), c_beta)


@dataclass(frozen=True)
class Character:
    chi: tuple[int, ...]
    lift_a: tuple[int, ...]


def lift_character(w: WeightConfiguration, chi: Sequence[int]) -> Character:
    """Integral ``a`` with ``gamma(a) = chi`` from the HNF of ``gamma^T``.

    The lift is ``a = sum_j chi_j u_j`` where ``u_j`` are the first ``n``
    rows of the unimodular transform; it is deterministic but otherwise
    arbitrary, and nothing downstream depends on the choice.
    """
    chi = tuple(int(x) for x in chi)
    if len(chi) != w.n:
        raise ValueError("character dimension mismatch")
    a = integral_solution(w.gamma, chi)
    assert a is not None and w.apply(a) == chi
    return Character(chi, a)


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal as a minimal antichain of supports.

    The unit ideal is ``{frozenset()}``; the zero ideal is ``set()``.
    """

    generators: tuple[frozenset, ...]

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        sets = {frozenset(s) for s in supports}
        minimal = [s for s in sets if not any(t < s for t in sets)]
        return cls(tuple(sorted(minimal, key=lambda s: (len(s), sorted(s)))))

    def avoids_zero_locus(self, support: Iterable[int]) -> bool:
        """A point with this coordinate support lies off ``V(B)``."""
        support = frozenset(support)
        return any(g <= support for g in self.generators)

    def index_lists(self) -> list[list[int]]:
        return [sorted(g) for g in self.generators]


@dataclass(frozen=True)
class ChamberFlags:
    semistable_nonempty: bool
    stable_nonempty: bool
    stable_equals_semistable: bool
    projective_regime: bool

    def to_json(self) -> dict:
        return {
            "semistable_nonempty": self.semistable_nonempty,
            "stable_nonempty": self.stable_nonempty,
            "stable_equals_semistable": self.stable_equals_semistable,
            "projective_regime": self.projective_regime,
        }


@dataclass(frozen=True)
class ChamberData:
    character: Character
    polyhedron: Polyhedron
    fan: Fan
    i_empty: frozenset
    ideal: MonomialIdeal
    flags: ChamberFlags

    def identity(self) -> tuple:
        return (self.fan, self.i_empty)

    def to_json(self) -> dict:
        return {
            "character": list(self.character.chi),
            "lift": list(self.character.lift_a),
            "fan": self.fan.to_json(),
            "i_empty": sorted(self.i_empty),
            "ideal_generators": self.ideal.index_lists(),
            "flags": self.flags.to_json(),
        }


def polyhedron_of_lift(w: WeightConfiguration, a: Sequence[int]) -> Polyhedron:
    """``P_a = {m : <m, nu_i> >= -a_i}`` in the kernel lattice coordinates."""
    return polyhedron_solve([(w.nu[i], a[i]) for i in range(w.r)])


def _fan_and_ideal(w: WeightConfiguration, p: Polyhedron) -> tuple[Fan, frozenset, MonomialIdeal]:
    # generalized normal fan: on walls P_a may drop dimension
    fan = normal_fan(p, generalized=True)
    i_empty = p.never_active()
    supports = []
    for sigma in fan.cones:
        outside = {i for i in range(w.r) if i not in i_empty and not sigma.contains(w.nu[i])}
        supports.append(outside | i_empty)
    return fan, i_empty, MonomialIdeal.from_supports(supports)


def chamber_data(w: WeightConfiguration, chi: Sequence[int],
                 lift: Sequence[int] | None = None) -> ChamberData:
    """Quotient fan, never-active indices and irrelevant ideal for ``chi``.

    ``lift`` overrides the default HNF lift; the result does not depend on it.
    """
    chi = tuple(int(x) for x in chi)
    where = cone_contains(w.c_beta, chi)
    if where is Membership.OUTSIDE:
        raise EmptySemistableLocus(f"character {chi} is outside the weight cone")
    if lift is None:
        character = lift_character(w, chi)
    else:
        lift = tuple(int(x) for x in lift)
        if w.apply(lift) != chi:
            raise ValueError("lift does not map to the character")
        character = Character(chi, lift)
    p = polyhedron_of_lift(w, character.lift_a)
    fan, i_empty, ideal = _fan_and_ideal(w, p)
    flags = ChamberFlags(
        semistable_nonempty=True,
        stable_nonempty=where is Membership.INTERIOR,
        stable_equals_semistable=stable_equals_semistable(w, chi),
        projective_regime=is_projective_regime(w),
    )
    return ChamberData(character, p, fan, i_empty, ideal, flags)


def semistable_support_test(w: WeightConfiguration, chi: Sequence[int], support: Iterable[int]) -> bool:
    """Whether a point with coordinate support ``support`` is ``chi``-semistable."""
    gens = [w.beta[i] for i in sorted(set(support))]
    return cone_from_generators(gens, w.n).contains(tuple(chi))


def spanned_walls(w: WeightConfiguration) -> list[tuple[int, ...]]:
    """Canonical normals of hyperplanes spanned by ``(n-1)``-subsets of the weights."""
    normals = set()
    for sub in combinations(range(w.r), w.n - 1):
        vecs = [w.beta[i] for i in sub]
        if rank(vecs) != w.n - 1:
            continue
        (normal,) = nullspace(vecs, w.n)
        normals.add(canonical_line(normal))
    return sorted(normals)


def stable_equals_semistable(w: WeightConfiguration, chi: Sequence[int]) -> bool:
    """``chi`` lies on no cone spanned by weights of dimension below ``n``.

    Any such cone lies in a spanned hyperplane, and within that hyperplane
    in the cone of all weights on it; so it suffices to test those cones.
    """
    chi = tuple(chi)
    for normal in spanned_walls(w):
        if dot(normal, chi) != 0:
            continue
        on = [b for b in w.beta if dot(normal, b) == 0]
        if cone_from_generators(on, w.n).contains(chi):
            return False
    return True


def is_projective_regime(w: WeightConfiguration) -> bool:
    return all(any(b) for b in w.beta) and w.c_beta.is_strongly_convex()


def integral_representative(v: Sequence) -> tuple[int, ...]:
    """Clear denominators of a rational interior point."""
    from .exact.linalg import lcm

    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    return tuple(int(Fraction(x) * den) for x in v)


@dataclass(frozen=True)
class SecondaryChamber:
    """A chamber of the secondary fan.

    ``cells`` are the arrangement cells it is made of; there is one unless
    several cells of the spanned-hyperplane arrangement share the same
    quotient data, in which case they are merged.
    """

    sign_vector: tuple[int, ...]
    representative: tuple[int, ...]
    data: ChamberData
    cells: tuple[ChamberCell, ...]

    @property
    def signs(self) -> str:
        return self.cells[0].signs

    def contains(self, chi: Sequence) -> bool:
        return any(cone_contains(c.closure, chi) is Membership.INTERIOR for c in self.cells)

    def to_json(self) -> dict:
        out = {"sign_vector": self.signs,
               "representative_chi": list(self.representative)}
        body = self.data.to_json()
        out.update({k: body[k] for k in ("fan", "i_empty", "ideal_generators", "flags")})
        if len(self.cells) > 1:
            out["cells"] = [c.signs for c in self.cells]
        return out


def interior_walls(w: WeightConfiguration) -> list[tuple[int, ...]]:
    """Spanned hyperplanes other than facets of the weight cone."""
    facets = {canonical_line(f) for f in w.c_beta.facet_normals}
    return [h for h in spanned_walls(w) if h not in facets]


def secondary_chambers(w: WeightConfiguration, map_fn=map) -> list[SecondaryChamber]:
    """Chambers of the secondary fan, sorted by sign vector.

    ``map_fn`` evaluates chamber data per cell and may be a parallel map;
    the result is independent of it.
    """
    walls = interior_walls(w)
    cells = arrangement_chambers(walls, w.c_beta)
    reps = [integral_representative(c.representative) for c in cells]
    datas = list(map_fn(_chamber_data_job, [(w, rep) for rep in reps]))
    groups: dict[tuple, list[int]] = {}
    for k, d in enumerate(datas):
        groups.setdefault(d.identity(), []).append(k)
    out = []
    for idx in groups.values():
        k = idx[0]
        out.append(SecondaryChamber(cells[k].sign_vector, reps[k], datas[k],
                                    tuple(cells[i] for i in idx)))
    out.sort(key=lambda c: c.signs)
    return out


def _chamber_data_job(args):
    w, chi = args
    return chamber_data(w, chi)


def chambers_equal(c1: ChamberData, c2: ChamberData) -> bool:
    """Same chamber, decided both by ``(fan, I_empty)`` and by the ideal."""
    by_fan = c1.identity() == c2.identity()
    by_ideal = c1.ideal == c2.ideal
    if by_fan != by_ideal:
        raise InconsistentChamberIdentity(
            f"fan test says {by_fan}, ideal test says {by_ideal}")
    return by_fan


__all__ = [
    "Character", "ChamberData", "ChamberFlags", "DegeneratePolyhedron", "EmptySemistableLocus",
    "InconsistentChamberIdentity", "MonomialIdeal", "NotSurjective", "SecondaryChamber",
    "WeightConfiguration", "chamber_data", "chambers_equal", "integral_representative",
    "interior_walls", "is_projective_regime", "lift_character", "make_weight_configuration",
    "polyhedron_of_lift", "secondary_chambers", "semistable_support_test", "spanned_walls",
    "stable_equals_semistable",
]
