"""From a two-point polyhedron to a trivial fundamental group.

The smallest lunar graph has two points joined by two arcs, so the sphere
is split into two faces.  We colour the faces, build the quadrangle club,
pick the left-greedy spanning tree and reduce the group presentation.
"""

from hrtrees import club_of, colour_faces, left_greedy_tree, pi1, validate
from hrtrees.fixtures import lunar

g = lunar(1)
print("points", g.points, "arcs", [a.id for a in g.arcs], "faces", g.faces)
print("valid:", validate(g).ok)

colouring = colour_faces(g)
print("face colours:", dict(colouring.assignment))

# the "arc" convention reproduces the hand-worked colouring of this example
club = club_of(g, {"r0": 1, "r1": 2}, "arc")
gr = club.graph
print(f"\nclub: {len(gr.vertices)} vertices, {len(gr.edges)} edges, {len(club.squares)} squares")
for e in gr.edges:
    print(f"  {e.id:9s} {e.s:>6s} -> {e.r:<6s} colour {e.colour}")
for q, (arc, end) in zip(club.squares, club.provenance):
    print(f"  square at {end} end of {arc}: {q.top} = {q.bottom}")

tree = left_greedy_tree(club)
print("\nspanning tree:", ", ".join(tree.edges))

verdict = pi1(gr, club.squares, tree)
print("\nreduction:")
for step in verdict.trace:
    extra = f" into {step.into}" if step.into else ""
    print(f"  {step.action:5s} {step.generator}{extra}  (square {step.relation})")
print("verdict:", verdict.status)
