"""Cutting and gluing.

Cut the C1 club into the half above each point, then glue the halves back
along the shared arcs and faces.  Then glue three copies of the lambda
diamond into the triangle.
"""

from hrtrees import is_isomorphic
from hrtrees.errors import CompatibilityError
from hrtrees.fixtures import c1club, triangle, triangle_pieces
from hrtrees.surgery import EdgeVertexRelation, IsoMap, SubgraphMark, cut, glue, quotient

g, sq = c1club()
upper = cut(g, sq, SubgraphMark({"p:v2"}), "outside")
lower = cut(g, sq, SubgraphMark({"p:v1"}), "outside")
print("halves:", [len(part.vertices) for part, _ in (upper, lower)], "vertices")

locus = ["a:a0", "a:a1", "f:r0", "f:r1"]
edges = ["(a0,r0)", "(a0,r1)", "(a1,r0)", "(a1,r1)"]
mark = SubgraphMark(locus, edges)
whole = glue(*upper, mark, *lower, mark, IsoMap({x: x for x in locus}, {x: x for x in edges}))
print("glued back to C1:", is_isomorphic(*whole, g, sq))

try:
    quotient(g, sq, EdgeVertexRelation(edge_pairs=[("(a0,r0)", "(a0,r1)")]))
except CompatibilityError as err:
    print("quotient refused:", err)

l1, l2, l3 = triangle_pieces()
step = glue(*l1, SubgraphMark({"C"}), *l2, SubgraphMark({"C"}), IsoMap({"C": "C"}, {}))
ab = SubgraphMark({"A", "B"})
t = glue(*step, ab, *l3, ab, IsoMap({"A": "A", "B": "B"}, {}))
print(f"three diamonds: {len(t[0].vertices)} vertices, {len(t[1])} squares;"
      f" same as triangle(): {is_isomorphic(*t, *triangle())}")
