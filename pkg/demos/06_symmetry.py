"""Symmetry and planarity.

The triangle graph has a rotation of order 3 that moves every vertex.  The
19-vertex example has no symmetry at all.
"""

from hrtrees import automorphisms, has_fixed_point_free_of_order, is_planar
from hrtrees.fixtures import rigid19, triangle

g, sq = triangle()
group = automorphisms(g, sq)
print(f"triangle: planar {is_planar(g)}, |Aut| = {len(group)}")
for a in group:
    if a.order() == 3 and not a.fixed_vertices():
        print("  order-3 rotation, no fixed vertex; C goes to", a.vertex_map["C"])
        break
print("  fixed-point-free of order 3:", has_fixed_point_free_of_order(g, sq, 3))

g, sq = rigid19()
print(f"rigid19: |Aut| = {len(automorphisms(g, sq))}")
