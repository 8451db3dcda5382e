"""
A del Pezzo surface of degree six
=================================

For five points the lifted action lives on C^6 and the quotients are
surfaces.  One chamber uses all six kernel vectors as rays: the hexagon
fan of P^2 blown up in three points.
"""

from vgit.exact.polyhedron import Fan
from vgit.oracle import fan_equal_labeled
from vgit.pgl2 import lifted_torus_action
from vgit.toric import secondary_chambers

w = lifted_torus_action(5)
print("nu:", w.nu)

hexagon = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))
dp6 = Fan(2, hexagon, tuple(tuple(sorted((i, (i + 1) % 6))) for i in range(6)))

chambers = secondary_chambers(w)
print(len(chambers), "chambers")
for c in chambers:
    tag = "  <- dP6" if fan_equal_labeled(c.data.fan, dp6) else ""
    print(f"chi={c.representative}  rays={len(c.data.fan.rays)}"
          f"  I_empty={sorted(c.data.i_empty)}{tag}")
