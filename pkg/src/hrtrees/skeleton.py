"""Coloured directed graphs, commuting squares, and the path categories they present.

Edges point from source to range.  A path is a tuple of edge ids written in
composition order, so ``(f, g)`` is composable when ``s(f) == r(g)``; its range
is ``r(f)`` and its source is ``s(g)``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CyclicSkeleton, MalformedInput, MissingSquare, SameColourAdjacent


@dataclass(frozen=True)
class Edge:
    id: str
    r: str
    s: str
    colour: int


@dataclass(frozen=True)
class ColouredGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        if len(set(vertices)) != len(vertices):
            raise MalformedInput("duplicate vertex ids")
        if len({e.id for e in edges}) != len(edges):
            raise MalformedInput("duplicate edge ids")
        known = set(vertices)
        for e in edges:
            if e.r not in known or e.s not in known:
                raise MalformedInput(f"edge {e.id} has an unknown endpoint")
            if not isinstance(e.colour, int) or e.colour < 1:
                raise MalformedInput(f"edge {e.id} has colour {e.colour!r}; colours are positive integers")

    @cached_property
    def colours(self) -> tuple[int, ...]:
        return tuple(sorted({e.colour for e in self.edges}))

    @property
    def k(self) -> int:
        """Rank: the number of distinct colours in use."""
        return len(self.colours)

    @cached_property
    def edge_index(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: str) -> Edge:
        return self.edge_index[edge_id]

    @cached_property
    def by_range(self) -> dict[str, tuple[str, ...]]:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.r].append(e.id)
        return {v: tuple(x) for v, x in out.items()}

    @cached_property
    def by_source(self) -> dict[str, tuple[str, ...]]:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.s].append(e.id)
        return {v: tuple(x) for v, x in out.items()}

    def colour(self, edge_id: str) -> int:
        return self.edge_index[edge_id].colour

    def range(self, path) -> str:
        return self.edge_index[path[0]].r

    def source(self, path) -> str:
        return self.edge_index[path[-1]].s

    def is_path(self, path) -> bool:
        try:
            es = [self.edge_index[x] for x in path]
        except KeyError:
            return False
        return all(a.s == b.r for a, b in zip(es, es[1:]))

    def degree(self, path) -> tuple[int, ...]:
        """Edge count per colour, indexed by colour 1..max colour."""
        top = max(self.colours, default=0)
        counts = Counter(self.colour(x) for x in path)
        return tuple(counts.get(c, 0) for c in range(1, top + 1))

    def paths_of_length_two(self):
        for f in self.edges:
            for g in self.by_range[f.s]:
                yield (f.id, g)


@dataclass(frozen=True)
class Square:
    """``top`` = (f, g) and ``bottom`` = (g', f') with fg ~ g'f'."""

    top: tuple[str, str]
    bottom: tuple[str, str]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))

    def key(self) -> frozenset:
        return frozenset((self.top, self.bottom))

    def edges(self) -> tuple[str, ...]:
        return self.top + self.bottom


@dataclass(frozen=True)
class SquareSet:
    squares: tuple[Square, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "squares",
            tuple(q if isinstance(q, Square) else Square(*q) for q in self.squares))

    @cached_property
    def index(self) -> dict[tuple[str, str], list[tuple[str, str]]]:
        idx = {}
        for q in self.squares:
            idx.setdefault(q.top, []).append(q.bottom)
            idx.setdefault(q.bottom, []).append(q.top)
        return idx

    def partner(self, pair) -> tuple[str, str] | None:
        found = self.index.get(tuple(pair))
        return found[0] if found else None

    def __len__(self):
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)

    def keys(self) -> set[frozenset]:
        return {q.key() for q in self.squares}


# -- completeness and associativity -------------------------------------------

@dataclass(frozen=True)
class CompletenessReport:
    missing: tuple = ()
    ambiguous: tuple = ()
    malformed: tuple = ()

    @property
    def ok(self) -> bool:
        return not (self.missing or self.ambiguous or self.malformed)


def _square_problem(g: ColouredGraph, q: Square) -> str | None:
    f, h = (g.edge(x) for x in q.top)
    h2, f2 = (g.edge(x) for x in q.bottom)
    if f.s != h.r or h2.s != f2.r:
        return "side is not a composable path"
    if f.r != h2.r or h.s != f2.s:
        return "sides do not share range and source"
    if f.colour != f2.colour or h.colour != h2.colour:
        return "opposite edges differ in colour"
    if f.colour == h.colour:
        return "square is monochromatic"
    return None


def check_complete(g: ColouredGraph, sq: SquareSet) -> CompletenessReport:
    """Every bicoloured length-2 path must lie in exactly one square."""
    for q in sq:
        for x in q.edges():
            if x not in g.edge_index:
                raise MalformedInput(f"square refers to unknown edge {x}")
    malformed = tuple((q, why) for q in sq if (why := _square_problem(g, q)))
    missing, ambiguous = [], []
    for path in g.paths_of_length_two():
        if g.colour(path[0]) == g.colour(path[1]):
            continue
        partners = sq.index.get(path, [])
        if not partners:
            missing.append(path)
        elif len(partners) > 1:
            ambiguous.append((path, tuple(partners)))
    return CompletenessReport(tuple(missing), tuple(ambiguous), malformed)


def flip(g: ColouredGraph, sq: SquareSet, path, position: int) -> tuple[str, ...]:
    """Replace the pair at ``position, position + 1`` by its square partner."""
    path = tuple(path)
    pair = path[position:position + 2]
    if len(pair) != 2:
        raise IndexError("position out of range")
    if g.colour(pair[0]) == g.colour(pair[1]):
        raise SameColourAdjacent(f"{pair} is monochromatic")
    other = sq.partner(pair)
    if other is None:
        raise MissingSquare(f"{pair} has no partner square")
    return path[:position] + other + path[position + 2:]


@dataclass(frozen=True)
class AssociativityReport:
    checked: int = 0
    failures: tuple = ()
    undefined: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures and not self.undefined

    @property
    def vacuous(self) -> bool:
        return self.checked == 0


def check_associative(g: ColouredGraph, sq: SquareSet) -> AssociativityReport:
    """Cube check on every tricoloured length-3 path.

    Flipping at positions 0,1,0 and at 1,0,1 must reach the same path.
    """
    checked, failures, undefined = 0, [], []
    for e in g.edges:
        for f in g.by_range[e.s]:
            for h in g.by_range[g.edge(f).s]:
                path = (e.id, f, h)
                if len({g.colour(x) for x in path}) < 3:
                    continue
                checked += 1
                try:
                    one = path
                    for pos in (0, 1, 0):
                        one = flip(g, sq, one, pos)
                    two = path
                    for pos in (1, 0, 1):
                        two = flip(g, sq, two, pos)
                except MissingSquare:
                    undefined.append(path)
                    continue
                if one != two:
                    failures.append((path, one, two))
    return AssociativityReport(checked, tuple(failures), tuple(undefined))


# -- paths and morphisms -------------------------------------------------------

def directed_cycle(g: ColouredGraph) -> tuple[str, ...] | None:
    """A directed cycle of vertices, or None when g is acyclic."""
    state = {}
    for root in g.vertices:
        if root in state:
            continue
        stack = [(root, iter(g.by_source[root]))]
        state[root] = 1
        trail = [root]
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[v] = 2
                stack.pop()
                trail.pop()
                continue
            w = g.edge(nxt).r
            if state.get(w) == 1:
                return tuple(trail[trail.index(w):]) + (w,)
            if w not in state:
                state[w] = 1
                trail.append(w)
                stack.append((w, iter(g.by_source[w])))
    return None


def _require_acyclic(g: ColouredGraph):
    cycle = directed_cycle(g)
    if cycle is not None:
        raise CyclicSkeleton(cycle)


def paths_from(g: ColouredGraph, u: str) -> dict[str, list[tuple[str, ...]]]:
    """All paths with range ``u``, grouped by source (the empty path at u included)."""
    out = {u: [()]}
    stack = [((), u)]
    while stack:
        path, v = stack.pop()
        for x in g.by_range[v]:
            longer = path + (x,)
            w = g.edge(x).s
            out.setdefault(w, []).append(longer)
            stack.append((longer, w))
    return out


@dataclass(frozen=True)
class PathClass:
    representative: tuple[str, ...]
    degree: tuple[int, ...]
    members: tuple[tuple[str, ...], ...] = field(default=(), compare=False)


def _flip_neighbours(g, sq, path):
    for i in range(len(path) - 1):
        pair = path[i:i + 2]
        if g.colour(pair[0]) == g.colour(pair[1]):
            continue
        for other in sq.index.get(pair, ()):
            yield path[:i] + other + path[i + 2:]


def _classes(g, sq, paths) -> list[PathClass]:
    left = set(paths)
    out = []
    for start in sorted(paths):
        if start not in left:
            continue
        members = {start}
        queue = deque([start])
        while queue:
            for nxt in _flip_neighbours(g, sq, queue.popleft()):
                if nxt not in members:
                    members.add(nxt)
                    queue.append(nxt)
        left -= members
        ordered = tuple(sorted(members))
        out.append(PathClass(ordered[0], g.degree(start), ordered))
    return out


def enumerate_morphisms(g: ColouredGraph, sq: SquareSet, u: str, v: str) -> list[PathClass]:
    """Flip-equivalence classes of paths with range ``u`` and source ``v``."""
    _require_acyclic(g)
    return _classes(g, sq, paths_from(g, u).get(v, []))


def singly_connected_witness(g: ColouredGraph, sq: SquareSet):
    """``(u, v, classes)`` for a hom-set with two or more classes, else None."""
    _require_acyclic(g)
    for u in g.vertices:
        for v, paths in paths_from(g, u).items():
            if len(paths) > 1:
                classes = _classes(g, sq, paths)
                if len(classes) > 1:
                    return u, v, classes
    return None


def is_singly_connected(g: ColouredGraph, sq: SquareSet) -> bool:
    return singly_connected_witness(g, sq) is None


def components(g: ColouredGraph) -> list[set[str]]:
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        adj[e.r].add(e.s)
        adj[e.s].add(e.r)
    seen, out = set(), []
    for root in g.vertices:
        if root in seen:
            continue
        part = {root}
        queue = deque([root])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in part:
                    part.add(w)
                    queue.append(w)
        seen |= part
        out.append(part)
    return out


def is_connected(g: ColouredGraph) -> bool:
    return len(components(g)) <= 1


def opposite(g: ColouredGraph, sq: SquareSet) -> tuple[ColouredGraph, SquareSet]:
    """Reverse every edge; the square fg ~ g'f' becomes gf ~ f'g'."""
    edges = tuple(Edge(e.id, e.s, e.r, e.colour) for e in g.edges)
    squares = tuple(
        Square((q.top[1], q.top[0]), (q.bottom[1], q.bottom[0])) for q in sq)
    return ColouredGraph(g.vertices, edges), SquareSet(squares)
