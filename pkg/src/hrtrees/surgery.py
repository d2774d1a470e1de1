"""Quotients, gluing along hereditary or co-hereditary subgraphs, and cutting.

A subgraph F is hereditary when no path can leave it once it has entered:
every edge whose source lies in F is itself in F.  It is co-hereditary when
no path can come back once it has left: an edge whose source lies outside F
is not in F and does not land in F.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .errors import (
    CompatibilityError,
    IsoNotSquarePreserving,
    MalformedInput,
    NotCohereditary,
    NotHereditary,
    TheoremViolation,
)
from .skeleton import ColouredGraph, Edge, Square, SquareSet, check_complete


@dataclass(frozen=True)
class EdgeVertexRelation:
    """Generating pairs of vertices and of edges, closed on demand.

    Related edges must share a colour, and relating two edges relates their
    ranges and their sources.
    """

    vertex_pairs: tuple[tuple[str, str], ...] = ()
    edge_pairs: tuple[tuple[str, str], ...] = ()

    def closure(self, g: ColouredGraph) -> tuple[dict[str, str], dict[str, str]]:
        """Class representative of every vertex and edge (first member in graph order)."""
        uf = DisjointSet([("v", v) for v in g.vertices] + [("e", e.id) for e in g.edges])
        for x, y in self.vertex_pairs:
            if x not in g.by_range or y not in g.by_range:
                raise MalformedInput(f"unknown vertex in pair {(x, y)}")
            uf.merge(("v", x), ("v", y))
        work = list(self.edge_pairs)
        while work:
            x, y = work.pop()
            if x not in g.edge_index or y not in g.edge_index:
                raise MalformedInput(f"unknown edge in pair {(x, y)}")
            ex, ey = g.edge(x), g.edge(y)
            if ex.colour != ey.colour:
                raise CompatibilityError(x, y, f"colours {ex.colour} and {ey.colour} differ")
            uf.merge(("e", x), ("e", y))
            uf.merge(("v", ex.r), ("v", ey.r))
            uf.merge(("v", ex.s), ("v", ey.s))
        # classes of edges are only enlarged by edge pairs, so the rule is
        # now closed; still assert it class by class
        first = {}
        for v in g.vertices:
            first.setdefault(uf[("v", v)], v)
        vrep = {v: first[uf[("v", v)]] for v in g.vertices}
        efirst = {}
        for e in g.edges:
            root = uf[("e", e.id)]
            if root in efirst:
                other = g.edge(efirst[root])
                if other.colour != e.colour or vrep[other.r] != vrep[e.r] or vrep[other.s] != vrep[e.s]:
                    raise CompatibilityError(other.id, e.id, "endpoints do not agree")
            else:
                efirst[root] = e.id
        erep = {e.id: efirst[uf[("e", e.id)]] for e in g.edges}
        return vrep, erep


def quotient(g: ColouredGraph, sq: SquareSet, rel: EdgeVertexRelation) -> tuple[ColouredGraph, SquareSet]:
    vrep, erep = rel.closure(g)
    vertices = tuple(v for v in g.vertices if vrep[v] == v)
    edges = tuple(Edge(e.id, vrep[e.r], vrep[e.s], e.colour) for e in g.edges if erep[e.id] == e.id)
    squares, seen = [], set()
    for q in sq:
        image = Square(tuple(erep[x] for x in q.top), tuple(erep[x] for x in q.bottom))
        key = tuple(sorted((image.top, image.bottom)))
        if key not in seen:
            seen.add(key)
            squares.append(image)
    return ColouredGraph(vertices, edges), SquareSet(tuple(squares))


# -- subgraphs -------------------------------------------------------------------

@dataclass(frozen=True)
class SubgraphMark:
    vertices: frozenset
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))

    def check(self, g: ColouredGraph):
        if not self.vertices <= set(g.vertices) or not self.edges <= set(g.edge_index):
            raise MalformedInput("mark refers to ids outside the graph")
        for x in self.edges:
            e = g.edge(x)
            if e.r not in self.vertices or e.s not in self.vertices:
                raise MalformedInput(f"marked edge {x} has an endpoint outside the mark")

    @classmethod
    def whole(cls, g: ColouredGraph) -> SubgraphMark:
        return cls(g.vertices, (e.id for e in g.edges))


def is_hereditary(g: ColouredGraph, f: SubgraphMark) -> bool:
    f.check(g)
    return all(e.id in f.edges for e in g.edges if e.s in f.vertices)


def is_cohereditary(g: ColouredGraph, f: SubgraphMark) -> bool:
    f.check(g)
    return all(e.id not in f.edges and e.r not in f.vertices
               for e in g.edges if e.s not in f.vertices)


def restrict(g: ColouredGraph, sq: SquareSet, vertices, edges) -> tuple[ColouredGraph, SquareSet]:
    """Induced piece on the given ids; squares survive when all four edges do."""
    vertices, edges = set(vertices), set(edges)
    graph = ColouredGraph(
        tuple(v for v in g.vertices if v in vertices),
        tuple(e for e in g.edges if e.id in edges))
    squares = tuple(q for q in sq if set(q.edges()) <= edges)
    return graph, SquareSet(squares)


def cut(g: ColouredGraph, sq: SquareSet, f: SubgraphMark, keep: str = "inside") -> tuple[ColouredGraph, SquareSet]:
    """Keep F (hereditary) or everything off F (co-hereditary)."""
    if keep == "inside":
        if not is_hereditary(g, f):
            raise NotHereditary("kept subgraph is not hereditary")
        out = restrict(g, sq, f.vertices, f.edges)
    elif keep == "outside":
        if not is_cohereditary(g, f):
            raise NotCohereditary("removed subgraph is not co-hereditary")
        vs = set(g.vertices) - f.vertices
        es = {e.id for e in g.edges if e.r in vs and e.s in vs}
        out = restrict(g, sq, vs, es)
    else:
        raise ValueError("keep is 'inside' or 'outside'")
    report = check_complete(*out)
    if not report.ok:
        raise TheoremViolation("restriction of a complete square set is not complete", report)
    return out


# -- gluing ----------------------------------------------------------------------

@dataclass(frozen=True)
class IsoMap:
    vertex_map: dict
    edge_map: dict


def disjoint_union(g1: ColouredGraph, sq1: SquareSet, g2: ColouredGraph, sq2: SquareSet):
    """Union with colliding ids prefixed ``1:`` and ``2:``.

    Returns the graph, its squares and the two renamings (one dict per input,
    covering vertices and edges).
    """
    clash_v = set(g1.vertices) & set(g2.vertices)
    clash_e = set(g1.edge_index) & set(g2.edge_index)

    def renamer(tag):
        def v(x):
            return f"{tag}:{x}" if x in clash_v else x

        def e(x):
            return f"{tag}:{x}" if x in clash_e else x
        return v, e

    vertices, edges, squares, maps = [], [], [], []
    for tag, g, sq in ((1, g1, sq1), (2, g2, sq2)):
        v, e = renamer(tag)
        vertices += [v(x) for x in g.vertices]
        edges += [Edge(e(x.id), v(x.r), v(x.s), x.colour) for x in g.edges]
        squares += [Square(tuple(map(e, q.top)), tuple(map(e, q.bottom))) for q in sq]
        maps.append(({x: v(x) for x in g.vertices}, {x.id: e(x.id) for x in g.edges}))
    return ColouredGraph(tuple(vertices), tuple(edges)), SquareSet(tuple(squares)), maps[0], maps[1]


def _check_iso(g1, sq1, f1, g2, sq2, f2, iso: IsoMap):
    vm, em = iso.vertex_map, iso.edge_map
    if set(vm) != f1.vertices or set(vm.values()) != f2.vertices or len(set(vm.values())) != len(vm):
        raise IsoNotSquarePreserving("vertex map is not a bijection between the marked vertex sets")
    if set(em) != f1.edges or set(em.values()) != f2.edges or len(set(em.values())) != len(em):
        raise IsoNotSquarePreserving("edge map is not a bijection between the marked edge sets")
    for x, y in em.items():
        a, b = g1.edge(x), g2.edge(y)
        if a.colour != b.colour:
            raise IsoNotSquarePreserving(f"{x} -> {y} changes colour")
        if vm[a.r] != b.r or vm[a.s] != b.s:
            raise IsoNotSquarePreserving(f"{x} -> {y} does not respect endpoints")
    inside1 = {tuple(sorted(((tuple(em[x] for x in q.top)), tuple(em[x] for x in q.bottom))))
               for q in sq1 if set(q.edges()) <= f1.edges}
    inside2 = {tuple(sorted((q.top, q.bottom))) for q in sq2 if set(q.edges()) <= f2.edges}
    if inside1 != inside2:
        raise IsoNotSquarePreserving("squares inside the marks do not correspond")


def glue(g1: ColouredGraph, sq1: SquareSet, f1: SubgraphMark,
         g2: ColouredGraph, sq2: SquareSet, f2: SubgraphMark,
         iso: IsoMap | dict) -> tuple[ColouredGraph, SquareSet]:
    """Identify F1 with F2 along ``iso`` and check the result is complete.

    Both marks must be hereditary or both co-hereditary.  ``iso`` is an
    IsoMap or a dict with ``vertexMap`` and ``edgeMap``.
    """
    if isinstance(iso, dict):
        iso = IsoMap(dict(iso.get("vertexMap", {})), dict(iso.get("edgeMap", {})))
    f1.check(g1)
    f2.check(g2)
    hered = is_hereditary(g1, f1) and is_hereditary(g2, f2)
    cohered = is_cohereditary(g1, f1) and is_cohereditary(g2, f2)
    if not (hered or cohered):
        raise NotHereditary("marks must both be hereditary or both co-hereditary")
    _check_iso(g1, sq1, f1, g2, sq2, f2, iso)
    for g, sq in ((g1, sq1), (g2, sq2)):
        if not check_complete(g, sq).ok:
            raise MalformedInput("gluing needs complete square sets on both pieces")
    union, squares, (v1, e1), (v2, e2) = disjoint_union(g1, sq1, g2, sq2)
    rel = EdgeVertexRelation(
        tuple((v1[x], v2[y]) for x, y in iso.vertex_map.items()),
        tuple((e1[x], e2[y]) for x, y in iso.edge_map.items()))
    out = _unprefix(*quotient(union, squares, rel))
    report = check_complete(*out)
    if not report.ok:
        raise TheoremViolation("glued square set is not complete", report)
    return out


def _unprefix(g: ColouredGraph, sq: SquareSet) -> tuple[ColouredGraph, SquareSet]:
    """Drop a ``1:``/``2:`` prefix wherever the bare id is no longer ambiguous."""
    def names(ids):
        bare = Counter(x.split(":", 1)[1] if x[:2] in ("1:", "2:") else x for x in ids)
        return {x: (x[2:] if x[:2] in ("1:", "2:") and bare[x[2:]] == 1 else x) for x in ids}

    v = names(g.vertices)
    e = names([x.id for x in g.edges])
    graph = ColouredGraph(tuple(v[x] for x in g.vertices),
                          tuple(Edge(e[x.id], v[x.r], v[x.s], x.colour) for x in g.edges))
    squares = SquareSet(tuple(Square(tuple(e[x] for x in q.top), tuple(e[x] for x in q.bottom))
                              for q in sq))
    return graph, squares


def relabel(g: ColouredGraph, sq: SquareSet, vertex_map: dict, edge_name=None) -> tuple[ColouredGraph, SquareSet]:
    """Rename vertices (missing keys stay put); ``edge_name(edge, r, s)`` renames edges."""
    v = lambda x: vertex_map.get(x, x)  # noqa: E731
    names = {e.id: (edge_name(e, v(e.r), v(e.s)) if edge_name else e.id) for e in g.edges}
    graph = ColouredGraph(tuple(map(v, g.vertices)),
                          tuple(Edge(names[e.id], v(e.r), v(e.s), e.colour) for e in g.edges))
    squares = SquareSet(tuple(Square(tuple(names[x] for x in q.top), tuple(names[x] for x in q.bottom))
                              for q in sq))
    return graph, squares
