"""Full-dimensional cells of a central hyperplane arrangement inside a cone."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .cone import Cone, DDState, cone_from_state
from .linalg import dot, primitive


class EmptyRegion(ValueError):
    """The region has empty interior."""


SIGN_CHARS = {1: "+", -1: "-"}


@dataclass(frozen=True)
class ChamberCell:
    sign_vector: tuple[int, ...]
    representative: tuple[int, ...]
    state: DDState = field(repr=False, compare=False)

    @cached_property
    def closure(self) -> Cone:
        return cone_from_state(self.state)

    @property
    def signs(self) -> str:
        return "".join(SIGN_CHARS[s] for s in self.sign_vector)


def sign_key(signs: Sequence[int]) -> str:
    """Sort key putting ``+`` before ``-`` position by position."""
    return "".join(SIGN_CHARS[s] for s in signs)


def arrangement_chambers(walls: Sequence[Sequence[int]], region: Cone) -> list[ChamberCell]:
    """Enumerate the open cells of ``{<w, x> = 0}`` meeting the interior of ``region``.

    Cells are refined one wall at a time with incremental double description;
    a cell is split only if the wall separates its extreme rays (or is not
    orthogonal to its lineality).  Output is sorted by sign vector.
    """
    if not region.is_full_dimensional():
        raise EmptyRegion("region is not full-dimensional")
    dim = region.ambient_dim
    walls = [primitive(w) for w in walls]
    if any(len(w) != dim for w in walls):
        raise ValueError("wall dimension mismatch")
    if any(not any(w) for w in walls):
        raise ValueError("zero wall normal")
    start = DDState.from_inequalities(dim, region.facet_normals)
    cells: list[tuple[tuple[int, ...], DDState]] = [((), start)]
    for w in walls:
        refined = []
        for signs, state in cells:
            if any(dot(w, l) != 0 for l in state.lineality):
                side = 0
            else:
                vals = [dot(w, r) for r in state.rays]
                has_pos = any(v > 0 for v in vals)
                has_neg = any(v < 0 for v in vals)
                side = 0 if has_pos and has_neg else (1 if has_pos else -1)
            if side:
                refined.append((signs + (side,), state))
                continue
            for s in (1, -1):
                child = state.add(tuple(s * x for x in w))
                if child.is_full_dimensional():
                    refined.append((signs + (s,), child))
        cells = refined
    out = []
    for signs, state in cells:
        rep = state.interior_point()
        assert all(s * dot(w, rep) > 0 for s, w in zip(signs, walls))
        out.append(ChamberCell(signs, rep, state))
    out.sort(key=lambda c: sign_key(c.sign_vector))
    return out
