"""
Configuration space of three points and the trefoil
===================================================

Centred, normalised triples of distinct points in C correspond to points
(a, b) of S^3 off the curve -4a^3 - 27b^2 = 0, which is a trefoil knot.
Rotating the three points acts by (a, b) -> (z^2 a, z^3 b).
"""

import numpy as np

from truncbraid import geometry as geo

# %% A meridian: two roots swap by a half twist -----------------------------------
loop, winding = geo.meridian_loop(256)
print("meridian: discriminant winds", winding, "time(s);",
      "root monodromy", geo.meridian_monodromy(256))

# %% A regular orbit: the full twist ----------------------------------------------
p = geo.SpherePoint.normalized(0.6, 0.8j)
print("orbit through", p, ": discriminant winds", geo.orbit_winding(p),
      "times; monodromy", geo.orbit_monodromy(p))
ref = geo.quotient_point(p)
print("[a^3 : b^2] constant along the orbit:",
      all(geo.projectively_equal(geo.quotient_point(q), ref) for q in geo.orbit_points(p, 128)))

# %% Two regular orbits link six times ---------------------------------------------
rng = np.random.default_rng(0)
for _ in range(3):
    p, q = geo.random_generic_point(rng), geo.random_generic_point(rng)
    value, nearest = geo.linking_number(geo.orbit_polyline(p, 512), geo.orbit_polyline(q, 512))
    print(f"linking number {value:.9f} -> {nearest}")

with open("meridian_discriminant.svg", "w") as fh:
    fh.write(geo.discriminant_svg([geo.discriminant(x) for x in loop]))
