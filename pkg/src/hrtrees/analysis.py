"""Planarity, automorphisms of coloured graphs with squares, and the club edge count."""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass

from .club import euler_defect
from .skeleton import ColouredGraph, SquareSet


# -- planarity -------------------------------------------------------------------

def _simple(g: ColouredGraph) -> dict[str, set[str]]:
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        if e.r != e.s:
            adj[e.r].add(e.s)
            adj[e.s].add(e.r)
    return adj


def _blocks(adj) -> list[set[str]]:
    """Vertex sets of the biconnected components with at least one edge (iterative Tarjan)."""
    index, low, out = {}, {}, []
    counter = itertools.count()
    for root in adj:
        if root in index:
            continue
        index[root] = low[root] = next(counter)
        stack = [(root, None, iter(adj[root]))]
        edges = []
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= index[parent]:
                        block = set()
                        while True:
                            a, b = edges.pop()
                            block |= {a, b}
                            if (a, b) == (parent, v):
                                break
                        out.append(block)
                continue
            if w == parent:
                continue
            if w not in index:
                index[w] = low[w] = next(counter)
                edges.append((v, w))
                stack.append((w, v, iter(adj[w])))
            elif index[w] < index[v]:
                low[v] = min(low[v], index[w])
                edges.append((v, w))
    return out


def _cycle(adj, vertices) -> list[str]:
    """Any cycle in a biconnected block with three or more vertices."""
    start = min(vertices)
    parent = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v] & vertices):
            if w == parent[v]:
                continue
            if w in parent:
                # v and w are both on the tree; join their ancestor chains
                def chain(x):
                    out = []
                    while x is not None:
                        out.append(x)
                        x = parent[x]
                    return out
                a, b = chain(v), chain(w)
                common = next(x for x in a if x in b)
                return a[: a.index(common) + 1] + list(reversed(b[: b.index(common)]))
            parent[w] = v
            stack.append(w)
    raise AssertionError("block without a cycle")


def _fragments(adj, vertices, placed, placed_edges):
    """Chords between placed vertices and components of the unplaced part."""
    out = []
    for v in sorted(placed):
        for w in sorted(adj[v] & placed):
            if v < w and frozenset((v, w)) not in placed_edges:
                out.append(({v, w}, [v, w]))
    rest = vertices - placed
    seen = set()
    for root in sorted(rest):
        if root in seen:
            continue
        comp, queue = {root}, deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x] & rest:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        contacts = {y for x in comp for y in adj[x] & placed}
        out.append((contacts, comp))
    return out


def _path_through(adj, contacts, comp, placed):
    if isinstance(comp, list):
        return comp
    a, b = sorted(contacts)[:2]
    parent = {}
    queue = deque()
    for c in sorted(adj[a] & comp):
        parent[c] = a
        queue.append(c)
    while queue:
        x = queue.popleft()
        if b in adj[x]:
            path = [b, x]
            while path[-1] != a:
                path.append(parent[path[-1]])
            return list(reversed(path))
        for y in sorted(adj[x] & comp):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    raise AssertionError("fragment does not join its contacts")


def _block_planar(adj, vertices: set[str]) -> bool:
    if len(vertices) <= 4:
        return True
    cyc = _cycle(adj, vertices)
    faces = [list(cyc), list(cyc)]
    placed = set(cyc)
    placed_edges = {frozenset(p) for p in zip(cyc, cyc[1:] + cyc[:1])}
    while True:
        frags = _fragments(adj, vertices, placed, placed_edges)
        if not frags:
            return True
        choice = None
        for contacts, comp in frags:
            fits = [i for i, f in enumerate(faces) if contacts <= set(f)]
            if not fits:
                return False
            if choice is None or len(fits) == 1:
                choice = (contacts, comp, fits[0])
                if len(fits) == 1:
                    break
        contacts, comp, i = choice
        path = _path_through(adj, contacts, comp, placed)
        face = faces.pop(i)
        a, b = path[0], path[-1]
        k = face.index(a)
        face = face[k:] + face[:k]
        j = face.index(b)
        inner = path[1:-1]
        faces.append(face[: j + 1] + list(reversed(inner)))
        faces.append(face[j:] + face[:1] + inner)
        placed |= set(path)
        placed_edges |= {frozenset(p) for p in zip(path, path[1:])}


def is_planar(g: ColouredGraph) -> bool:
    """Planarity of the underlying simple undirected graph (Demoucron's algorithm per block)."""
    adj = _simple(g)
    n = len(adj)
    m = sum(len(x) for x in adj.values()) // 2
    if n >= 3 and m > 3 * n - 6:
        return False
    return all(_block_planar(adj, b) for b in _blocks(adj) if len(b) > 2)


# -- isomorphisms ----------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    vertex_map: dict
    edge_map: dict

    def __call__(self, x):
        return self.vertex_map.get(x, self.edge_map.get(x))

    def compose(self, other: Automorphism) -> Automorphism:
        """``self`` after ``other``."""
        return Automorphism(
            {v: self.vertex_map[w] for v, w in other.vertex_map.items()},
            {e: self.edge_map[f] for e, f in other.edge_map.items()})

    def inverse(self) -> Automorphism:
        return Automorphism({w: v for v, w in self.vertex_map.items()},
                            {f: e for e, f in self.edge_map.items()})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.vertex_map.items()) and \
            all(k == v for k, v in self.edge_map.items())

    def order(self) -> int:
        power, n = self, 1
        while not power.is_identity():
            power = self.compose(power)
            n += 1
        return n

    def fixed_vertices(self) -> list[str]:
        return [v for v, w in self.vertex_map.items() if v == w]


def _signature(g: ColouredGraph, v: str):
    ins = Counter(g.colour(x) for x in g.by_range[v])
    outs = Counter(g.colour(x) for x in g.by_source[v])
    return tuple(sorted(ins.items())), tuple(sorted(outs.items()))


def _square_keys(sq: SquareSet, emap=None):
    if emap is None:
        return {q.key() for q in sq}
    return {frozenset(((emap[q.top[0]], emap[q.top[1]]), (emap[q.bottom[0]], emap[q.bottom[1]])))
            for q in sq}


def isomorphisms(g1: ColouredGraph, sq1: SquareSet, g2: ColouredGraph, sq2: SquareSet,
                 preserve_squares: bool = True, first_only: bool = False):
    """Colour-preserving isomorphisms g1 -> g2, optionally required to carry squares onto squares.

    Vertices are matched by backtracking, pruned by per-colour in/out degree
    signatures and by edge counts against already-matched vertices.  Each
    vertex bijection is extended to edges over every permutation of parallel
    edges.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return []
    if preserve_squares and len(sq1) != len(sq2):
        return []
    sig1 = {v: _signature(g1, v) for v in g1.vertices}
    sig2 = {v: _signature(g2, v) for v in g2.vertices}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return []

    def bundles(g):
        out = {}
        for e in g.edges:
            out.setdefault((e.r, e.s, e.colour), []).append(e.id)
        return out

    b1, b2 = bundles(g1), bundles(g2)

    def between(b, g):
        out = {}
        for (r, s, c), ids in b.items():
            out.setdefault((r, s), Counter())[c] += len(ids)
        return out

    c1, c2 = between(b1, g1), between(b2, g2)
    nbr1 = {v: set() for v in g1.vertices}
    for r, s in c1:
        nbr1[r].add(s)
        nbr1[s].add(r)
    nbr2 = {v: set() for v in g2.vertices}
    for r, s in c2:
        nbr2[r].add(s)
        nbr2[s].add(r)

    # breadth-first order so each new vertex usually has a matched neighbour
    order, seen = [], set()
    for root in sorted(g1.vertices, key=lambda v: (-len(nbr1[v]), v)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(nbr1[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    by_sig = {}
    for v in g2.vertices:
        by_sig.setdefault(sig2[v], []).append(v)

    target_keys = _square_keys(sq2)
    results = []
    vmap, used = {}, set()

    def consistent(v, x):
        for u, y in vmap.items():
            if c1.get((v, u), Counter()) != c2.get((x, y), Counter()):
                return False
            if c1.get((u, v), Counter()) != c2.get((y, x), Counter()):
                return False
        return c1.get((v, v), Counter()) == c2.get((x, x), Counter())

    def extend_edges():
        groups = [(ids, b2[(vmap[r], vmap[s], c)]) for (r, s, c), ids in b1.items()]
        for choice in itertools.product(*(itertools.permutations(t) for _, t in groups)):
            emap = {}
            for (src, _), img in zip(groups, choice):
                emap.update(zip(src, img))
            if preserve_squares and _square_keys(sq1, emap) != target_keys:
                continue
            results.append(Automorphism(dict(vmap), emap))
            if first_only:
                return True
        return False

    def place(i):
        if i == len(order):
            return extend_edges()
        v = order[i]
        anchor = next((u for u in nbr1[v] if u in vmap), None)
        pool = nbr2[vmap[anchor]] if anchor is not None else by_sig.get(sig1[v], [])
        for x in sorted(pool):
            if x in used or sig2[x] != sig1[v] or not consistent(v, x):
                continue
            vmap[v] = x
            used.add(x)
            if place(i + 1):
                return True
            del vmap[v]
            used.discard(x)
        return False

    place(0)
    return results


def automorphisms(g: ColouredGraph, sq: SquareSet, preserve_squares: bool = True) -> list[Automorphism]:
    return isomorphisms(g, sq, g, sq, preserve_squares)


def is_isomorphic(g1, sq1, g2, sq2, preserve_squares: bool = True) -> bool:
    return bool(isomorphisms(g1, sq1, g2, sq2, preserve_squares, first_only=True))


def has_fixed_point_free_of_order(g: ColouredGraph, sq: SquareSet, n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return False
    return any(s.order() == n and not s.fixed_vertices() for s in automorphisms(g, sq))


def euler_identity(g: ColouredGraph) -> bool:
    """|E1| - 2|E0| + 4 == 0."""
    return euler_defect(g) == 0
