"""Spanning trees, fundamental group presentations, and the triviality check.

The fundamental group of the path category of a coloured graph with squares
is generated by the edges, with one relation ``f g = g' f'`` per square and
every edge of a spanning tree set to the identity.  The reducer here only
kills and merges generators, so it can prove triviality but never claims the
opposite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .club import QuadrangleClub
from .errors import DisconnectedInput, ReducedUndecided
from .skeleton import (
    ColouredGraph,
    SquareSet,
    enumerate_morphisms,
    is_connected,
    paths_from,
    singly_connected_witness,
)


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[str, ...]
    weights: dict

    def __contains__(self, edge_id):
        return edge_id in self.edges


def _kruskal(graph: ColouredGraph, ordered) -> tuple[str, ...]:
    forest = DisjointSet(graph.vertices)
    chosen = []
    target = len(graph.vertices) - 1
    for x in ordered:
        if len(chosen) == target:
            break
        e = graph.edge(x)
        if not forest.connected(e.r, e.s):
            forest.merge(e.r, e.s)
            chosen.append(x)
    if len(chosen) < target:
        raise DisconnectedInput("graph is not connected; no spanning tree")
    return tuple(chosen)


def left_greedy_weights(club: QuadrangleClub) -> dict[str, int]:
    """Weight 2 on (a,R(a)) and on (f,p) when f = R(a) for an arc a at p; else 1."""
    g = club.polyhedron
    heavy = set()
    for a in g.arcs:
        right = g.R(a.id)
        heavy.add(f"({a.id},{right})")
        heavy.add(f"({right},{a.r})")
        heavy.add(f"({right},{a.s})")
    return {e.id: 2 if e.id in heavy else 1 for e in club.graph.edges}


def left_greedy_tree(club: QuadrangleClub) -> SpanningTree:
    """Maximum-weight spanning tree, heavy edges first, ties by edge id."""
    weights = left_greedy_weights(club)
    ordered = sorted(weights, key=lambda x: (-weights[x], x))
    return SpanningTree(_kruskal(club.graph, ordered), weights)


def spanning_tree(graph: ColouredGraph, order=None) -> SpanningTree:
    """Plain Kruskal with unit weights, scanning ``order`` (edge ids by default)."""
    ordered = sorted(e.id for e in graph.edges) if order is None else list(order)
    return SpanningTree(_kruskal(graph, ordered), {e.id: 1 for e in graph.edges})


# -- presentations ---------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    label: str = ""

    def word(self):
        return [(x, 1) for x in self.lhs] + [(x, -1) for x in reversed(self.rhs)]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    killed: frozenset = frozenset()


@dataclass(frozen=True)
class Step:
    action: str  # "kill" or "merge"
    generator: str
    relation: int
    into: str | None = None


@dataclass(frozen=True)
class Pi1Verdict:
    status: str  # "Trivial" or "Reduced"
    presentation: GroupPresentation
    residual: GroupPresentation
    trace: tuple[Step, ...]
    tree: SpanningTree

    @property
    def trivial(self) -> bool:
        return self.status == "Trivial"

    @property
    def killed(self) -> frozenset:
        return frozenset(self.presentation.generators) - frozenset(self.residual.generators)


def presentation(graph: ColouredGraph, squares: SquareSet, tree: SpanningTree) -> GroupPresentation:
    rels = tuple(
        Relation(q.top, q.bottom, f"square {i}") for i, q in enumerate(squares))
    return GroupPresentation(tuple(e.id for e in graph.edges), rels, frozenset(tree.edges))


class _State:
    """Generator classes; each class is either the identity or a representative."""

    def __init__(self, generators, killed):
        self.order = {x: i for i, x in enumerate(generators)}
        self.rep = {x: (None if x in killed else x) for x in generators}

    def value(self, x):
        return self.rep[x]

    def kill(self, x):
        r = self.rep[x]
        for y, v in self.rep.items():
            if v == r:
                self.rep[y] = None

    def merge(self, x, y):
        rx, ry = self.rep[x], self.rep[y]
        keep, drop = sorted((rx, ry), key=self.order.get)
        for z, v in self.rep.items():
            if v == drop:
                self.rep[z] = keep

    def reduce(self, word):
        out = []
        for x, e in word:
            v = self.rep[x]
            if v is None:
                continue
            if out and out[-1] == (v, -e):
                out.pop()
            else:
                out.append((v, e))
        while len(out) >= 2 and out[0] == (out[-1][0], -out[-1][1]):
            out = out[1:-1]
        return out


def _reduce(pres: GroupPresentation):
    state = _State(pres.generators, pres.killed)
    trace = []
    progress = True
    while progress:
        progress = False
        for i, rel in enumerate(pres.relations):
            w = state.reduce(rel.word())
            if len(w) == 1:
                trace.append(Step("kill", w[0][0], i))
                state.kill(w[0][0])
                progress = True
                break
            if len(w) == 2 and w[0][1] == -w[1][1] and w[0][0] != w[1][0]:
                trace.append(Step("merge", w[0][0], i, w[1][0]))
                state.merge(w[0][0], w[1][0])
                progress = True
                break
    return state, tuple(trace)


def pi1(graph: ColouredGraph, squares: SquareSet, tree: SpanningTree) -> Pi1Verdict:
    pres = presentation(graph, squares, tree)
    state, trace = _reduce(pres)
    alive = tuple(x for x in pres.generators if state.value(x) == x)
    residual_rels = []
    for rel in pres.relations:
        w = state.reduce(rel.word())
        if w:
            lhs = tuple(x for x, e in w if e > 0)
            rhs = tuple(x for x, e in reversed(w) if e < 0)
            residual_rels.append(Relation(lhs, rhs, rel.label))
    dead = frozenset(x for x in pres.generators if state.value(x) is None)
    residual = GroupPresentation(alive, tuple(residual_rels), dead)
    status = "Trivial" if not alive else "Reduced"
    return Pi1Verdict(status, pres, residual, trace, tree)


def replay(verdict: Pi1Verdict) -> bool:
    """Re-derive every trace step from the relations and the tree alone."""
    pres = verdict.presentation
    state = _State(pres.generators, pres.killed)
    for step in verdict.trace:
        w = state.reduce(pres.relations[step.relation].word())
        if step.action == "kill":
            if len(w) != 1 or w[0][0] != step.generator:
                return False
            state.kill(step.generator)
        else:
            if len(w) != 2 or {w[0][0], w[1][0]} != {step.generator, step.into} \
                    or w[0][1] != -w[1][1]:
                return False
            state.merge(step.generator, step.into)
    alive = {x for x in pres.generators if state.value(x) == x}
    return alive == set(verdict.residual.generators)


def _candidate_trees(graph: ColouredGraph, attempts: int):
    ids = sorted(e.id for e in graph.edges)
    yield spanning_tree(graph, ids)
    yield spanning_tree(graph, list(reversed(ids)))
    for seed in range(max(0, attempts - 2)):
        shuffled = list(ids)
        random.Random(seed).shuffle(shuffled)
        yield spanning_tree(graph, shuffled)


def tree_verdict(g, squares: SquareSet | None = None, attempts: int = 8) -> Pi1Verdict:
    """First Trivial verdict over a few spanning trees, else the last Reduced one.

    Clubs use the left-greedy tree first.
    """
    if isinstance(g, QuadrangleClub):
        club, graph, squares = g, g.graph, g.squares
    else:
        club, graph = None, g
    if not is_connected(graph):
        raise DisconnectedInput("graph is not connected")
    trees = _candidate_trees(graph, attempts)
    if club is not None:
        trees = iter([left_greedy_tree(club), *trees])
    verdict = None
    for tree in trees:
        verdict = pi1(graph, squares, tree)
        if verdict.trivial:
            break
    return verdict


def is_tree(g, squares: SquareSet | None = None, attempts: int = 8) -> bool:
    """True when the reduction proves the fundamental group trivial.

    A stalled reduction raises ReducedUndecided carrying the residual
    presentation instead of answering False.
    """
    verdict = tree_verdict(g, squares, attempts)
    if not verdict.trivial:
        raise ReducedUndecided(verdict)
    return True


# -- essential cocycles ------------------------------------------------------------

def club_cocycle(club: QuadrangleClub) -> dict[str, int]:
    """+1 on arc-face edges and -1 on face-point edges."""
    out = {}
    for e in club.graph.edges:
        kinds = {club.kind(e.r), club.kind(e.s)}
        out[e.id] = 1 if "arc" in kinds else -1
    return out


def degree_cocycle_essential(g, squares: SquareSet | None = None, cocycle: dict | None = None) -> bool:
    """Is the functor injective on every hom-set?

    For clubs the functor is ``club_cocycle``; otherwise ``cocycle`` if given,
    else the degree.  A cocycle that is not constant on some square raises
    ValueError since it does not define a functor.
    """
    if isinstance(g, QuadrangleClub):
        if cocycle is None:
            cocycle = club_cocycle(g)
        graph, squares = g.graph, g.squares
    else:
        graph = g
    if cocycle is None:
        def value(path):
            return graph.degree(path)
    else:
        for q in squares:
            if sum(cocycle[x] for x in q.top) != sum(cocycle[x] for x in q.bottom):
                raise ValueError(f"cocycle is not constant on square {q}")

        def value(path):
            return sum(cocycle[x] for x in path)

    if singly_connected_witness(graph, squares) is None:
        return True

    for u in graph.vertices:
        for v, paths in paths_from(graph, u).items():
            if len(paths) < 2:
                continue
            classes = enumerate_morphisms(graph, squares, u, v)
            values = [value(pc.representative) for pc in classes]
            if len(set(values)) < len(values):
                return False
    return True
