"""
The projective line as a torus quotient
=======================================

C* acting on C^2 with weights (1, 1).  A character chi = 1 gives P^1;
chi = 0 gives the affine quotient, a point.
"""

from vgit.toric import chamber_data, make_weight_configuration, secondary_chambers

w = make_weight_configuration([(1,), (1,)])
print("kernel vectors nu:", w.nu)

# a positive character: P_a is the interval [-1, 0], whose normal fan is
# the fan of P^1, and the unstable locus is the origin
d = chamber_data(w, (1,))
print("P_a vertices:", [str(v[0]) for v in d.polyhedron.vertices])
print("fan rays:", d.fan.rays, "max cones:", d.fan.max_cones)
print("irrelevant ideal:", d.ideal.index_lists())

# the trivial character: everything is semistable
d0 = chamber_data(w, (0,))
print("chi = 0 ideal:", d0.ideal.index_lists(), "lineality:", d0.fan.lineality)

# the secondary fan has a single chamber, the positive ray
for c in secondary_chambers(w):
    print("chamber representative:", c.representative)
