"""
Regular tilings behind f(n, d)
==============================

Spherical tilings are built from the von Dyck group <x, y | x^2, y^n, (xy)^d>:
darts are group elements, and faces, edges and vertices are the orbits of
<y>, <x> and <xy>.  Euclidean and hyperbolic ones are drawn a few generations
out from a seed polygon.  SVG files land in ./tilings/.
"""

from pathlib import Path

from truncbraid import classify, synthesize_tiling
from truncbraid.render import render

out = Path("tilings")
out.mkdir(exist_ok=True)

print(f"{'symbol':>7} {'geometry':>10} {'V':>3} {'E':>3} {'F':>3} {'V-E+F':>6}")
for n, d in [(2, 4), (4, 2), (3, 3), (3, 4), (4, 3), (3, 5), (5, 3)]:
    t = synthesize_tiling(n, d)
    print(f"{{{n},{d}}}".rjust(7), f"{t.geometry.value:>10} {t.V:>3} {t.E:>3} {t.F:>3} "
          f"{t.euler_characteristic:>6}")

# bigons, the equator, the icosahedron, and the planar cases
for n, d, depth in [(2, 6, 0), (5, 2, 0), (3, 5, 0), (4, 4, 4), (6, 3, 3), (5, 4, 4)]:
    doc = render(n, d, depth)
    path = out / f"tiling_{n}_{d}.svg"
    doc.write(path)
    print(f"{{{n},{d}}} {classify(n, d).geometry.value:>10}: {doc.polygon_count:5d} polygons -> {path}")
