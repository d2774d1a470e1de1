"""Lattice pieces, cubes and the hypercube.

Omega graphs are boxes cut from the coloured integer lattice.  They satisfy
the square axioms, but the Euler-type count only holds for the single
square.  The 4-cube is a 4-graph that is a tree but cannot be drawn in the
plane.
"""

from hrtrees import euler_identity, is_planar, is_tree
from hrtrees.fixtures import cube3, hypercube, omega
from hrtrees.skeleton import check_associative, check_complete

for m in [(1, 1), (2, 2), (5, 3)]:
    g, sq = omega(2, m)
    print(f"omega{m}: {len(g.vertices)} vertices, {len(sq)} squares, "
          f"complete {check_complete(g, sq).ok}, euler {euler_identity(g)}")

g, sq = cube3()
rep = check_associative(g, sq)
print(f"\ncube3: associative {rep.ok} over {rep.checked} tri-coloured paths")

for k in (3, 4):
    g, sq = hypercube(k)
    print(f"hypercube({k}): tree {is_tree(g, sq)}, planar {is_planar(g)}")
