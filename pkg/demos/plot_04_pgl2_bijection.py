"""
Point configurations on the projective line
===========================================

PGL2 acts on (P^1)^n.  The Hilbert-Mumford criterion compares the
heaviest cluster of coinciding points with half the total weight.  Inside
the half-space where a1 + a2 dominates, the chambers match the chambers
of the lifted torus action, and a linear map realizing the match is found
by search.
"""

from vgit.pgl2 import hm_table, pgl2_chambers_in_halfspace, verify_chamber_bijection

# all 15 coincidence patterns of four points with equal weights
for profile, cls in hm_table((1, 1, 1, 1)):
    print(f"{str(profile):10s} {cls.value}")

for n in (4, 5):
    pg = pgl2_chambers_in_halfspace(n, {1, 2})
    print(f"\nn={n}: walls {[sorted(wl.S) for wl in pg.walls]}")
    rep = verify_chamber_bijection(n, {1, 2})
    print(f"PGL2 chambers {len(rep.pgl2_chambers)}, torus chambers {len(rep.gkz_chambers)}")
    print("linear maps found:", rep.maps_found)
    if rep.matching:
        print("one map, rows:", rep.matching.matrix)
        for i, j in rep.matching.chamber_pairs[:4]:
            print("  ", rep.pgl2_chambers[i].representative, "->",
                  rep.gkz_chambers[j].representative)
