"""Three slices of pizza need four colours.

Pz3 is a triangle rim with a centre point joined to each rim point.  Its four
faces all touch each other, so the palette is four.  The club has 14 vertices
and the tree reduction still kills every generator.
"""

from hrtrees import club_of, tree_verdict
from hrtrees.fixtures import pizza

for n in range(1, 7):
    club = club_of(pizza(n))
    print(f"pizza({n}): palette {club.colouring.palette_size}, "
          f"club {len(club.graph.vertices)}/{len(club.graph.edges)}/{len(club.squares)}")

club = club_of(pizza(3))
v = tree_verdict(club)
print(f"\nPz3 tree has {len(v.tree.edges)} edges; {len(v.presentation.generators)} generators")
print("first eliminations:", [s.generator for s in v.trace[:4]])
print("verdict:", v.status)

# the reduction can be replayed from the trace alone
from hrtrees.pi1 import replay
print("trace replays:", replay(v))
