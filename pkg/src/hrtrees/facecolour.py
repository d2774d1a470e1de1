"""Proper colourings of the faces of a polyhedral graph with at most four colours."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Infeasible, MalformedInput, NotBipartiteDual
from .polyhedral import PolyhedralGraph, dual, embedded

# rendering legend shared by the exporters
COLOUR_NAMES = {1: "blue", 2: "red", 3: "green", 4: "purple"}
COLOUR_INDEX = {v: k for k, v in COLOUR_NAMES.items()}


@dataclass(frozen=True)
class FaceColouring:
    assignment: dict

    @property
    def palette_size(self) -> int:
        return len(set(self.assignment.values()))

    def __getitem__(self, face):
        return self.assignment[face]


def improper_arcs(g: PolyhedralGraph, assignment: dict) -> list[str]:
    """Arcs whose two sides carry the same colour."""
    g = embedded(g)
    return [a.id for a in g.arcs if assignment[g.L(a.id)] == assignment[g.R(a.id)]]


def is_proper(g: PolyhedralGraph, assignment: dict) -> bool:
    g = embedded(g)
    if set(assignment) != set(g.faces):
        return False
    return not improper_arcs(g, assignment)


def two_colour(g: PolyhedralGraph) -> FaceColouring:
    """Bipartition the dual graph, starting with colour 1 on the first face.

    Raises NotBipartiteDual with an odd-valency point when there is one and
    with an odd cycle of faces found by the breadth-first search.
    """
    g = embedded(g)
    adj = dual(g).adjacency()
    colour = {}
    parent = {}
    for root in g.faces:
        if root in colour:
            continue
        colour[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for h in sorted(adj[f], key=g.faces.index):
                if h not in colour:
                    colour[h] = 3 - colour[f]
                    parent[h] = f
                    queue.append(h)
                elif colour[h] == colour[f]:
                    odd = next((p for p in g.points if g.valency(p) % 2), None)
                    raise NotBipartiteDual(odd, _odd_cycle(parent, f, h))
    return FaceColouring(colour)


def _odd_cycle(parent, f, h):
    def chain(x):
        out = []
        while x is not None:
            out.append(x)
            x = parent[x]
        return out

    a, b = chain(f), chain(h)
    common = next(x for x in a if x in b)
    return a[: a.index(common) + 1] + list(reversed(b[: b.index(common)]))


def colour_faces(g: PolyhedralGraph, max_colours: int = 4, supplied: dict | None = None) -> FaceColouring:
    """Smallest-palette proper face colouring.

    Tries two colours by bipartition, then backtracks with three and four
    colours over the faces in their listed order, lowest colour first.  A
    supplied assignment is only checked.
    """
    g = embedded(g)
    if supplied is not None:
        if set(supplied) != set(g.faces):
            raise MalformedInput("supplied colouring does not cover exactly the faces")
        if any(c not in (1, 2, 3, 4) for c in supplied.values()):
            raise MalformedInput("colours must be in 1..4")
        bad = improper_arcs(g, supplied)
        if bad:
            raise MalformedInput(f"supplied colouring is improper on arcs {bad}")
        return FaceColouring(dict(supplied))
    if max_colours not in (2, 3, 4):
        raise ValueError("max_colours must be 2, 3 or 4")
    try:
        return two_colour(g)
    except NotBipartiteDual:
        if max_colours == 2:
            raise Infeasible(2) from None
    adj = dual(g).adjacency()
    for palette in range(3, max_colours + 1):
        found = _backtrack(g.faces, adj, palette)
        if found is not None:
            return FaceColouring(found)
    raise Infeasible(max_colours)


def _backtrack(faces, adj, palette):
    assign = {}

    def place(i):
        if i == len(faces):
            return True
        f = faces[i]
        taken = {assign[h] for h in adj[f] if h in assign}
        for c in range(1, palette + 1):
            if c not in taken:
                assign[f] = c
                if place(i + 1):
                    return True
                del assign[f]
        return False

    return dict(assign) if place(0) else None
