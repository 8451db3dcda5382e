"""
Four chambers for the lifted action on C^4
==========================================

The torus (t1, t2, s) acts on (x1, y1, x2, y2) with weights e1, e1+e3,
e2, e2+e3.  Two interior walls cut the weight cone into four chambers,
each with quotient P^1 but a different unstable locus.
"""

from vgit.pgl2 import coordinate_names, lifted_torus_action
from vgit.toric import (chamber_data, interior_walls, secondary_chambers,
                        stable_equals_semistable)

w = lifted_torus_action(4)
names = coordinate_names(4)
print("weights:", w.beta)
print("interior walls:", interior_walls(w))


def monomial(support):
    return "*".join(names[i] for i in sorted(support)) or "1"


for c in secondary_chambers(w):
    gens = ", ".join(monomial(g) for g in c.data.ideal.generators)
    never = [names[i] for i in sorted(c.data.i_empty)]
    print(f"{c.signs}  chi={c.representative}  I_empty={never}  B=<{gens}>")

# on a wall stable and semistable points differ
print("stable = semistable at (1,1,1):", stable_equals_semistable(w, (1, 1, 1)))
print("stable = semistable at (2,2,1):", stable_equals_semistable(w, (2, 2, 1)))
wall = chamber_data(w, (1, 1, 1))
print("wall ideal:", [monomial(g) for g in wall.ideal.generators])
