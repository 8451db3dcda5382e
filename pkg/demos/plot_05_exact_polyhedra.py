"""
Exact cones, polytopes and arrangements
=======================================

The kernel underneath everything: double description in exact integer
arithmetic, vertex enumeration, normal fans and arrangement cells.
"""

from vgit.exact import (arrangement_chambers, cone_from_generators, cone_from_inequalities,
                        hnf, kernel_lattice, normal_fan, polyhedron_solve)

# V-representation to H-representation and back
c = cone_from_generators([(1, 0), (1, 1), (1, 2)])
print("facets:", c.facet_normals, "rays:", c.generators)
print("roundtrip equal:", cone_from_inequalities(c.facet_normals) == c)

# integer lattices
h, u = hnf([[2, 4], [1, 3]])
print("HNF:", h, "transform:", u)
print("kernel of [1 1]:", kernel_lattice([[1, 1]]))

# the triangle u1 in [0,1], u2 in [-1,0], u1+u2 in [0,1] and its normal fan
p = polyhedron_solve([((1, 0), 0), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 0),
                      ((1, 1), 0), ((-1, -1), 1)])
print("vertices:", [tuple(str(x) for x in v) for v in p.vertices])
f = normal_fan(p)
print("normal fan rays:", f.rays)

# cells of two lines in the plane
plane = cone_from_inequalities([], (), 2)
for cell in arrangement_chambers([(1, 0), (0, 1)], plane):
    print(cell.signs, cell.representative)
