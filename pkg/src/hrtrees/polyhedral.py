"""Polyhedral graphs: points and arcs embedded on the sphere.

An embedding is given either by a rotation system (for every point, the arcs
around it in counter-clockwise order) or by an explicit side map sending each
arc to its left and right faces.  Faces are derived from the rotation by the
usual dart-tracing walk.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import MalformedInput


@dataclass(frozen=True)
class Arc:
    id: str
    r: str
    s: str


@dataclass(frozen=True)
class PolyhedralGraph:
    """Points, arcs, and an embedding.

    ``rotation`` maps each point to its incident arcs in counter-clockwise
    order.  ``side`` maps each arc to ``(L, R)``.  ``faces`` lists the face ids;
    when omitted it is read off ``side`` in order of first appearance.
    """

    points: tuple[str, ...]
    arcs: tuple[Arc, ...]
    rotation: dict | None = None
    side: dict | None = None
    faces: tuple[str, ...] = ()

    def __post_init__(self):
        points = tuple(self.points)
        arcs = tuple(a if isinstance(a, Arc) else Arc(*a) for a in self.arcs)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "arcs", arcs)
        if len(set(points)) != len(points):
            raise MalformedInput("duplicate point ids")
        arc_ids = [a.id for a in arcs]
        if len(set(arc_ids)) != len(arc_ids):
            raise MalformedInput("duplicate arc ids")
        known = set(points)
        for a in arcs:
            if a.r not in known or a.s not in known:
                raise MalformedInput(f"arc {a.id} has an unknown endpoint")
        if self.rotation is not None:
            rot = {p: tuple(v) for p, v in self.rotation.items()}
            for p, around in rot.items():
                if p not in known:
                    raise MalformedInput(f"rotation given for unknown point {p}")
                for a in around:
                    if a not in self.arc_index:
                        raise MalformedInput(f"rotation at {p} names unknown arc {a}")
            object.__setattr__(self, "rotation", rot)
        if self.side is not None:
            side = {}
            for a, lr in self.side.items():
                if a not in self.arc_index:
                    raise MalformedInput(f"side given for unknown arc {a}")
                if isinstance(lr, dict):
                    lr = (lr["L"], lr["R"])
                side[a] = tuple(lr)
            missing = [a for a in arc_ids if a not in side]
            if missing:
                raise MalformedInput(f"side map misses arcs {missing}")
            object.__setattr__(self, "side", side)
            seen = dict.fromkeys(f for a in arc_ids for f in side[a])
            faces = tuple(self.faces) or tuple(seen)
            if set(faces) != set(seen):
                raise MalformedInput("face list does not match the side map")
            object.__setattr__(self, "faces", faces)
        elif self.faces:
            raise MalformedInput("faces given without a side map")

    @cached_property
    def arc_index(self) -> dict[str, Arc]:
        return {a.id: a for a in self.arcs}

    def arc(self, arc_id: str) -> Arc:
        return self.arc_index[arc_id]

    @cached_property
    def incident(self) -> dict[str, tuple[str, ...]]:
        inc = {p: [] for p in self.points}
        for a in self.arcs:
            inc[a.r].append(a.id)
            if a.s != a.r:
                inc[a.s].append(a.id)
        return {p: tuple(v) for p, v in inc.items()}

    def valency(self, p: str) -> int:
        return len(self.incident[p])

    def L(self, arc_id: str) -> str:
        return self.side[arc_id][0]

    def R(self, arc_id: str) -> str:
        return self.side[arc_id][1]

    def other_face(self, arc_id: str, face: str) -> str:
        left, right = self.side[arc_id]
        return right if face == left else left

    @cached_property
    def face_arcs(self) -> dict[str, tuple[str, ...]]:
        out = {f: [] for f in self.faces}
        for a in self.arcs:
            for f in dict.fromkeys(self.side[a.id]):
                out[f].append(a.id)
        return {f: tuple(v) for f, v in out.items()}

    @cached_property
    def face_points(self) -> dict[str, tuple[str, ...]]:
        """Points on the boundary of each face, in point order."""
        out = {}
        for f, arcs in self.face_arcs.items():
            on = set()
            for a in arcs:
                on.update((self.arc(a).r, self.arc(a).s))
            out[f] = tuple(p for p in self.points if p in on)
        return out


@dataclass(frozen=True)
class DualGraph:
    """Faces as vertices; one edge ``(arc, L, R)`` per arc, multiplicity kept."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def adjacency(self) -> dict[str, set[str]]:
        adj = {f: set() for f in self.vertices}
        for _, f1, f2 in self.edges:
            adj[f1].add(f2)
            adj[f2].add(f1)
        return adj


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str
    witness: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    valencies: dict = field(default_factory=dict)
    face_count: int | None = None
    parallel_arcs: tuple[tuple[str, ...], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


# -- face tracing ------------------------------------------------------------

def _check_rotation(g: PolyhedralGraph):
    if g.rotation is None:
        raise MalformedInput("no rotation system supplied")
    for p in g.points:
        around = g.rotation.get(p, ())
        if sorted(around) != sorted(g.incident[p]):
            raise MalformedInput(
                f"rotation at {p} is not a permutation of its incident arcs"
            )


def _darts_faces(g: PolyhedralGraph) -> list[list[tuple[str, int]]]:
    """Orbits of the face permutation on darts.

    Dart ``(a, +1)`` runs r(a) -> s(a), ``(a, -1)`` runs s(a) -> r(a).  Each
    orbit is the boundary of the face lying to the left of its darts.
    """
    def head(d):
        a = g.arc(d[0])
        return a.s if d[1] > 0 else a.r

    seen = set()
    orbits = []
    for a in g.arcs:
        for direction in (1, -1):
            start = (a.id, direction)
            if start in seen:
                continue
            orbit = []
            d = start
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                v = head(d)
                around = g.rotation[v]
                nxt = around[around.index(d[0]) - 1]
                d = (nxt, 1 if g.arc(nxt).r == v else -1)
            orbits.append(orbit)
    return orbits


def trace_faces(g: PolyhedralGraph, prefix: str = "f") -> PolyhedralGraph:
    """Fill in faces and sides from the rotation system.

    L(a) is the face on the left when walking from r(a) to s(a).  Faces are
    numbered by their smallest incident arc (in arc order), the left face of
    that arc first.
    """
    _check_rotation(g)
    orbits = _darts_faces(g)
    order = {a.id: i for i, a in enumerate(g.arcs)}
    keyed = sorted(orbits, key=lambda o: min((order[a], -d) for a, d in o))
    names = {}
    for i, orbit in enumerate(keyed):
        for dart in orbit:
            names[dart] = f"{prefix}{i}"
    side = {a.id: (names[(a.id, 1)], names[(a.id, -1)]) for a in g.arcs}
    faces = tuple(f"{prefix}{i}" for i in range(len(keyed)))
    return PolyhedralGraph(g.points, g.arcs, g.rotation, side, faces)


def rename_faces(g: PolyhedralGraph, mapping: dict[str, str]) -> PolyhedralGraph:
    side = {a: (mapping[lf], mapping[rf]) for a, (lf, rf) in g.side.items()}
    return PolyhedralGraph(g.points, g.arcs, g.rotation, side, tuple(mapping[f] for f in g.faces))


def boundary_walks(g: PolyhedralGraph) -> dict[str, tuple[str, ...]]:
    """Cyclic point sequence around each face, read from the rotation system."""
    traced = trace_faces(g)
    names = {t: t for t in traced.faces}
    if g.side is not None:
        names = _match_faces(g, traced)
        if names is None:
            raise MalformedInput("side map does not match the rotation system")
    out = {}
    for orbit in _darts_faces(g):
        a, d = orbit[0]
        t = traced.side[a][0 if d > 0 else 1]
        out[names[t]] = tuple(g.arc(x).r if e > 0 else g.arc(x).s for x, e in orbit)
    return {f: out[f] for f in (g.faces or traced.faces)}


def _match_faces(g: PolyhedralGraph, traced: PolyhedralGraph) -> dict | None:
    """Bijection traced face -> named face agreeing on every arc's side pair."""
    candidates = {}
    for t in traced.faces:
        options = set(g.faces)
        for a in traced.face_arcs[t]:
            options &= set(g.side[a])
        candidates[t] = options
    order = sorted(traced.faces, key=lambda t: len(candidates[t]))
    pairs = {a.id: sorted(g.side[a.id]) for a in g.arcs}

    def consistent(assign):
        for a in g.arcs:
            lf, rf = traced.side[a.id]
            if lf in assign and rf in assign and sorted((assign[lf], assign[rf])) != pairs[a.id]:
                return False
        return True

    def extend(i, assign, used):
        if i == len(order):
            return dict(assign)
        t = order[i]
        for f in sorted(candidates[t] - used):
            assign[t] = f
            if consistent(assign):
                found = extend(i + 1, assign, used | {f})
                if found:
                    return found
            del assign[t]
        return None

    if len(traced.faces) != len(g.faces):
        return None
    return extend(0, {}, frozenset())


# -- validation --------------------------------------------------------------

def _connected(g: PolyhedralGraph) -> bool:
    if not g.points:
        return True
    adj = {p: set() for p in g.points}
    for a in g.arcs:
        adj[a.r].add(a.s)
        adj[a.s].add(a.r)
    seen = {g.points[0]}
    queue = deque(seen)
    while queue:
        for q in adj[queue.popleft()]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(g.points)


def validate(g: PolyhedralGraph) -> ValidationReport:
    """Check the standing assumptions on a polyhedral graph.

    Parallel arcs are reported but are not a violation: the lunar family needs
    them.
    """
    bad = []
    for a in g.arcs:
        if a.r == a.s:
            bad.append(Violation("NoLoops", f"arc {a.id} is a loop", (a.id,)))
    if not _connected(g):
        bad.append(Violation("Connected", "underlying graph is disconnected"))
    valencies = {p: g.valency(p) for p in g.points}
    for p, d in valencies.items():
        if d < 2:
            bad.append(Violation("MinValency", f"point {p} has valency {d}", (p,)))
    groups = {}
    for a in g.arcs:
        groups.setdefault(frozenset((a.r, a.s)), []).append(a.id)
    parallel = tuple(tuple(v) for v in groups.values() if len(v) > 1)

    face_count = None
    sided = g
    if g.rotation is not None and not any(v.code == "NoLoops" for v in bad):
        _check_rotation(g)
        traced = trace_faces(g)
        if g.side is None:
            sided = traced
        elif _match_faces(g, traced) is None:
            bad.append(Violation(
                "SideMismatch", "side map does not match the faces of the rotation system"))
    if sided.side is None:
        bad.append(Violation("NoEmbedding", "neither rotation nor side map supplied"))
    else:
        face_count = len(sided.faces)
        for a in g.arcs:
            if sided.L(a.id) == sided.R(a.id):
                bad.append(Violation(
                    "DistinctSides", f"arc {a.id} has the same face on both sides", (a.id,)))
        expected = len(g.arcs) - len(g.points) + 2
        if face_count != expected:
            bad.append(Violation(
                "EulerCount", f"{face_count} faces, expected {expected}", (face_count, expected)))
    return ValidationReport(tuple(bad), valencies, face_count, parallel)


def dual(g: PolyhedralGraph) -> DualGraph:
    if g.side is None:
        g = trace_faces(g)
    return DualGraph(g.faces, tuple((a.id, g.L(a.id), g.R(a.id)) for a in g.arcs))


def embedded(g: PolyhedralGraph) -> PolyhedralGraph:
    """``g`` with sides filled in, tracing faces when only a rotation is given."""
    return g if g.side is not None else trace_faces(g)
