"""The quadrangle club of a polyhedral graph and its colouring.

Vertices are the points, arcs and faces.  There is an edge ``(a,f)`` from face
``f`` to arc ``a`` for each side of ``a`` and an edge ``(f,p)`` from point ``p``
to face ``f`` for each point on the boundary of ``f``; the first label is the
range.  Each arc contributes two squares, one at each end:

    (a,R(a))(R(a),x) = (a,L(a))(L(a),x)      for x = r(a) and x = s(a).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ColourClash, MalformedInput
from .facecolour import FaceColouring, colour_faces
from .polyhedral import PolyhedralGraph, embedded
from .skeleton import (
    AssociativityReport,
    ColouredGraph,
    CompletenessReport,
    Edge,
    Square,
    SquareSet,
    check_associative,
    check_complete,
    is_connected,
    opposite,
    singly_connected_witness,
)

KINDS = {"p": "point", "a": "arc", "f": "face"}


def vertex_id(kind: str, label: str) -> str:
    return f"{kind}:{label}"


def edge_id(x: str, y: str) -> str:
    return f"({x},{y})"


@dataclass(frozen=True)
class QuadrangleClub:
    """Club graph with its squares; ``provenance[i]`` is ``(arc, "left"|"right")``.

    ``colouring`` is None for the uncoloured club, whose edges all carry
    colour 1.
    """

    polyhedron: PolyhedralGraph
    graph: ColouredGraph
    squares: SquareSet
    provenance: tuple[tuple[str, str], ...]
    colouring: FaceColouring | None = None
    reversed: bool = False

    def kind(self, vertex: str) -> str:
        return KINDS[vertex.split(":", 1)[0]]

    def label(self, vertex: str) -> str:
        return vertex.split(":", 1)[1]

    def opposite(self) -> QuadrangleClub:
        g, sq = opposite(self.graph, self.squares)
        return replace(self, graph=g, squares=sq, reversed=not self.reversed)


def _labels_distinct(g: PolyhedralGraph):
    pts, arcs, faces = set(g.points), {a.id for a in g.arcs}, set(g.faces)
    if pts & arcs or pts & faces or arcs & faces:
        raise MalformedInput("point, arc and face labels must be distinct to name club edges")


def build_club(g: PolyhedralGraph) -> QuadrangleClub:
    """Uncoloured club: every edge has colour 1, squares already attached."""
    g = embedded(g)
    _labels_distinct(g)
    vertices = (
        [vertex_id("p", p) for p in g.points]
        + [vertex_id("a", a.id) for a in g.arcs]
        + [vertex_id("f", f) for f in g.faces]
    )
    edges = []
    for a in g.arcs:
        for f in dict.fromkeys((g.R(a.id), g.L(a.id))):
            edges.append(Edge(edge_id(a.id, f), vertex_id("a", a.id), vertex_id("f", f), 1))
    for f in g.faces:
        for p in g.face_points[f]:
            edges.append(Edge(edge_id(f, p), vertex_id("f", f), vertex_id("p", p), 1))
    graph = ColouredGraph(tuple(vertices), tuple(edges))
    squares, provenance = _half_arc_squares(g)
    return QuadrangleClub(g, graph, squares, provenance)


def _half_arc_squares(g: PolyhedralGraph):
    squares, provenance = [], []
    for a in g.arcs:
        left, right = g.L(a.id), g.R(a.id)
        for end, x in (("left", a.r), ("right", a.s)):
            squares.append(Square(
                (edge_id(a.id, right), edge_id(right, x)),
                (edge_id(a.id, left), edge_id(left, x)),
            ))
            provenance.append((a.id, end))
    return SquareSet(tuple(squares)), tuple(provenance)


def half_arc_conditions(club: QuadrangleClub) -> SquareSet:
    """The two squares contributed by each arc, in arc order (left end first)."""
    squares = _half_arc_squares(club.polyhedron)[0]
    if club.reversed:
        squares = opposite(club.graph, squares)[1]
    return squares


CONVENTIONS = ("point", "arc")


def colour_club(club: QuadrangleClub, colouring: FaceColouring | dict | None = None,
                convention: str = "point") -> QuadrangleClub:
    """Colour the club edges from a proper face colouring.

    With the ``"point"`` convention the edge ``(f,p)`` takes the colour of
    ``f`` and ``(a,f)`` takes the colour of the other face of ``a``; opposite
    edges of every square then agree and no clash can occur.  The ``"arc"``
    convention gives ``(a,f)`` the colour of ``f`` and reads the colours of the
    ``(f,p)`` edges off each quadrangle; it clashes as soon as a face meets two
    differently coloured neighbours at one point.
    """
    g = club.polyhedron
    if colouring is None:
        colouring = colour_faces(g)
    elif isinstance(colouring, dict):
        colouring = colour_faces(g, supplied=colouring)
    else:
        colouring = colour_faces(g, supplied=colouring.assignment)
    c = colouring.assignment
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")

    demands = {}
    for a in g.arcs:
        left, right = g.L(a.id), g.R(a.id)
        for x in (a.r, a.s):
            if convention == "point":
                wanted = {
                    edge_id(a.id, right): c[left], edge_id(a.id, left): c[right],
                    edge_id(right, x): c[right], edge_id(left, x): c[left],
                }
            else:
                wanted = {
                    edge_id(a.id, right): c[right], edge_id(a.id, left): c[left],
                    edge_id(right, x): c[left], edge_id(left, x): c[right],
                }
            for e, colour in wanted.items():
                demands.setdefault(e, []).append((colour, (a.id, x)))
    coloured = []
    for e in club.graph.edges:
        asked = demands[e.id]
        if len({colour for colour, _ in asked}) > 1:
            raise ColourClash(e.id, asked)
        coloured.append(replace(e, colour=asked[0][0]))
    graph = ColouredGraph(club.graph.vertices, tuple(coloured))
    return replace(club, graph=graph, colouring=colouring)


def club_of(g: PolyhedralGraph, colouring=None, convention: str = "point") -> QuadrangleClub:
    """Build and colour in one step."""
    return colour_club(build_club(g), colouring, convention)


def euler_defect(graph: ColouredGraph) -> int:
    """|E1| - 2|E0| + 4, which vanishes on clubs."""
    return len(graph.edges) - 2 * len(graph.vertices) + 4


@dataclass(frozen=True)
class KGraphCertificate:
    complete: CompletenessReport
    associative: AssociativityReport
    connected: bool
    singly_connected: bool
    euler: bool
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return (self.complete.ok and self.associative.ok and self.connected
                and self.singly_connected and self.euler)

    def summary(self) -> dict:
        return {
            "complete": self.complete.ok,
            "associative": self.associative.ok,
            "connected": self.connected,
            "singlyConnected": self.singly_connected,
            "euler": self.euler,
        }


def certify(graph: ColouredGraph, squares: SquareSet) -> KGraphCertificate:
    """Run the five checks on any coloured graph with squares."""
    witness = singly_connected_witness(graph, squares)
    if witness is not None:
        u, v, classes = witness
        witness = (u, v, tuple(pc.representative for pc in classes))
    return KGraphCertificate(
        check_complete(graph, squares),
        check_associative(graph, squares),
        is_connected(graph),
        witness is None,
        euler_defect(graph) == 0,
        witness,
    )


def verify_club_theorem(club: QuadrangleClub) -> KGraphCertificate:
    return certify(club.graph, club.squares)


def quadrangle(club: QuadrangleClub, arc: str, end: str) -> tuple[ColouredGraph, SquareSet]:
    """The 4-vertex piece of the club cut out by one half-arc square.

    ``end`` is ``"left"`` for the range of the arc and ``"right"`` for its
    source.
    """
    i = club.provenance.index((arc, end))
    q = club.squares.squares[i]
    ids = set(q.edges())
    edges = tuple(e for e in club.graph.edges if e.id in ids)
    touched = {v for e in edges for v in (e.r, e.s)}
    vertices = tuple(v for v in club.graph.vertices if v in touched)
    return ColouredGraph(vertices, edges), SquareSet((q,))
