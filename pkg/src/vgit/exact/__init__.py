"""Exact rational linear algebra, lattices, cones, polyhedra and arrangements."""
from .arrangement import ChamberCell, EmptyRegion, arrangement_chambers
from .cone import (Cone, Membership, cone_contains, cone_from_generators,
                   cone_from_inequalities, is_strongly_convex)
from .lattice import hnf, integral_solution, is_hnf, kernel_lattice
from .polyhedron import (DegeneratePolyhedron, Fan, Infeasible, NotPointed,
                         Polyhedron, normal_fan, polyhedron_solve)

__all__ = [
    "ChamberCell", "Cone", "DegeneratePolyhedron", "EmptyRegion", "Fan", "Infeasible",
    "Membership", "NotPointed", "Polyhedron", "arrangement_chambers", "cone_contains",
    "cone_from_generators", "cone_from_inequalities", "hnf", "integral_solution",
    "is_hnf", "is_strongly_convex", "kernel_lattice", "normal_fan", "polyhedron_solve",
]
