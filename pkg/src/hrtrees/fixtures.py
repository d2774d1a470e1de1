"""Named examples: the lunar and pizza polyhedra, lattice graphs, and figure transcriptions.

Polyhedral fixtures are built from point coordinates and departure angles so
the rotation system is geometrically honest; faces are then traced and given
their customary names.  Figure fixtures list every arrow as drawn, with the
squares spelled out by their corners.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .polyhedral import Arc, PolyhedralGraph, trace_faces, validate
from .skeleton import ColouredGraph, Edge, Square, SquareSet

BLUE, RED, GREEN, PURPLE = 1, 2, 3, 4


def _rotation(angles: dict[str, dict[str, float]]) -> dict[str, tuple[str, ...]]:
    """Counter-clockwise order of arcs at each point from departure angles in degrees."""
    return {p: tuple(sorted(d, key=lambda a: d[a] % 360)) for p, d in angles.items()}


def _named(g: PolyhedralGraph, names: dict[str, str], order) -> PolyhedralGraph:
    side = {a: (names[lf], names[rf]) for a, (lf, rf) in g.side.items()}
    return PolyhedralGraph(g.points, g.arcs, g.rotation, side, tuple(order))


def lunar(n: int) -> PolyhedralGraph:
    """Two points joined by n+1 arcs a0..an, faces r0 (outer) .. rn.

    a0 runs along the top from v2 to v1 and the others run from v1 to v2,
    which puts the outer face r0 on the right of both a0 and an.  For n = 1
    this is the two-arc graph whose club has the tree (a0,r0), (a1,r0),
    (r0,v1), (r0,v2), (a0,r1).
    """
    if n < 1:
        raise ValueError("n >= 1")
    arcs = [Arc("a0", "v2", "v1")] + [Arc(f"a{i}", "v1", "v2") for i in range(1, n + 1)]
    at_v1, at_v2 = {}, {}
    for i in range(n + 1):
        theta = 60 - 120 * i / n
        at_v1[f"a{i}"] = theta
        at_v2[f"a{i}"] = 180 - theta
    g = trace_faces(PolyhedralGraph(("v1", "v2"), arcs, _rotation({"v1": at_v1, "v2": at_v2})))
    names = {g.R("a0"): "r0"}
    for i in range(n):
        names[g.L(f"a{i + 1}")] = f"r{i + 1}"
    return _named(g, names, [f"r{i}" for i in range(n + 1)])


def pizza(n: int) -> PolyhedralGraph:
    """Rim points v1..vn around a hub v(n+1), slices R1..Rn and outer face R(n+1).

    Rim points sit counter-clockwise in index order.  Rim arc a_i runs
    clockwise from c(i-1) to c(i), where c = v1, vn, v(n-1), ..., v2, and bounds
    slice R_i; spoke I_j runs from v_j to the hub.  For n = 3 this is the
    pizza with a1: v1->v3, a2: v3->v2, a3: v2->v1.  pizza(1) is lunar(1).
    """
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return lunar(1)
    hub = f"v{n + 1}"
    rim = [f"v{j}" for j in range(1, n + 1)]
    cyc = [rim[0]] + rim[:0:-1]
    angle = {f"v{j}": 90 + 360 * (j - 1) / n for j in range(1, n + 1)}
    arcs = [Arc(f"a{i}", cyc[i - 1], cyc[i % n]) for i in range(1, n + 1)]
    arcs += [Arc(f"I{j}", f"v{j}", hub) for j in range(1, n + 1)]
    around = {p: {} for p in rim + [hub]}
    for i in range(1, n + 1):
        tail, head = cyc[i - 1], cyc[i % n]
        around[tail][f"a{i}"] = angle[tail] - 90
        around[head][f"a{i}"] = angle[head] + 90
    for j in range(1, n + 1):
        around[f"v{j}"][f"I{j}"] = angle[f"v{j}"] + 180
        around[hub][f"I{j}"] = angle[f"v{j}"]
    points = tuple(rim + [hub])
    g = trace_faces(PolyhedralGraph(points, arcs, _rotation(around)))
    names = {g.L("a1"): f"R{n + 1}"}
    for i in range(1, n + 1):
        names[g.R(f"a{i}")] = f"R{i}"
    return _named(g, names, [f"R{i}" for i in range(1, n + 2)])


def random_polyhedral(n_points: int, seed: int = 0, keep: float = 0.6) -> PolyhedralGraph:
    """Random straight-line polyhedral graph on 3..n points.

    Start from the Delaunay triangulation of random points and delete random
    edges while the graph stays bridgeless with every valency at least 2.
    """
    from scipy.spatial import Delaunay

    if n_points < 3:
        raise ValueError("need at least 3 points")
    rng = random.Random(seed)
    while True:
        xy = [(rng.random(), rng.random()) for _ in range(n_points)]
        try:
            tri = Delaunay(xy)
        except Exception:
            continue
        break
    pairs = set()
    for simplex in tri.simplices:
        for i, j in itertools.combinations(sorted(int(x) for x in simplex), 2):
            pairs.add((i, j))
    pairs = sorted(pairs)
    rng.shuffle(pairs)
    kept = set(pairs)
    for pair in pairs:
        if rng.random() < keep:
            continue
        trial = kept - {pair}
        if _bridgeless(n_points, trial):
            kept = trial
    points = tuple(f"p{i}" for i in range(n_points))
    arcs, around = [], {p: {} for p in points}
    for k, (i, j) in enumerate(sorted(kept)):
        aid = f"e{k}"
        arcs.append(Arc(aid, points[i], points[j]))
        dx, dy = xy[j][0] - xy[i][0], xy[j][1] - xy[i][1]
        around[points[i]][aid] = math.degrees(math.atan2(dy, dx))
        around[points[j]][aid] = math.degrees(math.atan2(-dy, -dx))
    return trace_faces(PolyhedralGraph(points, arcs, _rotation(around)), prefix="F")


def _bridgeless(n: int, pairs) -> bool:
    adj = {i: set() for i in range(n)}
    for i, j in pairs:
        adj[i].add(j)
        adj[j].add(i)
    if any(len(v) < 2 for v in adj.values()):
        return False

    def connected(skip):
        seen, stack = {0}, [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if {x, y} == skip or y in seen:
                    continue
                seen.add(y)
                stack.append(y)
        return len(seen) == n

    return connected(set()) and all(connected({i, j}) for i, j in pairs)


# -- lattice graphs ---------------------------------------------------------------

def _vid(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def omega(k: int, m) -> tuple[ColouredGraph, SquareSet]:
    """Lattice points 0 <= p <= m; edge f_i^p runs from p + e_i to p with colour i."""
    m = tuple(m)
    if not 1 <= k <= 4 or len(m) != k or any(x < 0 for x in m):
        raise ValueError("need 1 <= k <= 4 and m a nonnegative k-vector")
    pts = list(itertools.product(*(range(x + 1) for x in m)))
    unit = [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def plus(p, i):
        return tuple(a + b for a, b in zip(p, unit[i]))

    def eid(i, p):
        return f"f{i + 1}@{_vid(p)}"

    edges, squares = [], []
    for p in pts:
        for i in range(k):
            q = plus(p, i)
            if q[i] <= m[i]:
                edges.append(Edge(eid(i, p), _vid(p), _vid(q), i + 1))
    for p in pts:
        for i, j in itertools.combinations(range(k), 2):
            far = plus(plus(p, i), j)
            if all(a <= b for a, b in zip(far, m)):
                squares.append(Square(
                    (eid(i, p), eid(j, plus(p, i))),
                    (eid(j, p), eid(i, plus(p, j)))))
    return ColouredGraph(tuple(_vid(p) for p in pts), tuple(edges)), SquareSet(tuple(squares))


def hypercube(k: int) -> tuple[ColouredGraph, SquareSet]:
    return omega(k, (1,) * k)


# -- figure transcriptions ---------------------------------------------------------

def _from_arrows(arrows, diamonds) -> tuple[ColouredGraph, SquareSet]:
    """``arrows`` are (id, source, range, colour); ``diamonds`` are
    (source, middle, other middle, range) corners of commuting squares."""
    vertices = list(dict.fromkeys(v for _, s, r, _ in arrows for v in (s, r)))
    edges = tuple(Edge(eid, r, s, c) for eid, s, r, c in arrows)
    graph = ColouredGraph(tuple(vertices), edges)
    between = {}
    for e in edges:
        between.setdefault((e.s, e.r), []).append(e.id)

    def one(s, r):
        found = between.get((s, r), [])
        if len(found) != 1:
            raise ValueError(f"expected one edge {s}->{r}, found {found}")
        return found[0]

    squares = []
    for s, m1, m2, r in diamonds:
        squares.append(Square((one(m1, r), one(s, m1)), (one(m2, r), one(s, m2))))
    return graph, SquareSet(tuple(squares))


def sphere2() -> tuple[ColouredGraph, SquareSet]:
    """Four unit squares whose realisation is the 2-sphere; sources u, v, sinks y, z."""
    arrows = [
        ("a", "u", "w", BLUE), ("b", "v", "w", BLUE),
        ("c", "x", "y", BLUE), ("d", "x", "z", BLUE),
        ("e", "u", "x", RED), ("f", "v", "x", RED),
        ("g", "w", "y", RED), ("h", "w", "z", RED),
    ]
    diamonds = [("u", "w", "x", "z"), ("v", "w", "x", "z"),
                ("u", "w", "x", "y"), ("v", "w", "x", "y")]
    return _from_arrows(arrows, diamonds)


def _cube_arrows(third: int, tag: str = ""):
    """Planar 3-cube with source oangle1 and sink angle0.

    The two inner blue arrows are drawn the other way round in the figure;
    as drawn no orientation of the six faces commutes, so they are reversed
    here, which turns the drawing into the lattice cube.
    """
    n = {v: tag + v for v in
         ("angle0", "angle1", "oangle0", "oangle1", "region1", "region2", "el1", "el2")}
    arrows = [
        ("e1", "region2", "angle0", RED),
        ("e2", "region1", "angle0", BLUE),
        ("e3", "oangle0", "angle0", third),
        ("e4", "angle1", "region2", BLUE),
        ("e5", "angle1", "region1", RED),
        ("e6", "oangle1", "angle1", third),
        ("e7", "el1", "oangle0", BLUE),
        ("e8", "el1", "region1", third),
        ("e9", "el2", "oangle0", RED),
        ("e10", "el2", "region2", third),
        ("e11", "oangle1", "el2", BLUE),
        ("e12", "oangle1", "el1", RED),
    ]
    arrows = [(tag + i, n[s], n[r], c) for i, s, r, c in arrows]
    corners = [
        ("angle1", "region1", "region2", "angle0"),
        ("el1", "oangle0", "region1", "angle0"),
        ("el2", "oangle0", "region2", "angle0"),
        ("oangle1", "el1", "angle1", "region1"),
        ("oangle1", "el2", "angle1", "region2"),
        ("oangle1", "el1", "el2", "oangle0"),
    ]
    return arrows, [tuple(n[v] for v in q) for q in corners]


def cube3() -> tuple[ColouredGraph, SquareSet]:
    return _from_arrows(*_cube_arrows(GREEN))


def degenerate4() -> tuple[ColouredGraph, SquareSet]:
    """Two planar 3-cubes, green and purple, sharing their sink."""
    a1, d1 = _cube_arrows(GREEN, "g.")
    a2, d2 = _cube_arrows(PURPLE, "p.")

    def shared(v):
        return "angle0" if v.endswith("angle0") and not v.endswith("oangle0") else v

    arrows = [(i, shared(s), shared(r), c) for i, s, r, c in a1 + a2]
    diamonds = [tuple(shared(v) for v in q) for q in d1 + d2]
    return _from_arrows(arrows, diamonds)


def _lambda_arrows(left: str, right: str, mid: str, over: str, under: str, small):
    """One side of the triangle: sources ``left`` and ``right``, sink ``mid``.

    ``over`` takes blue edges from both sources and a red edge to ``mid``;
    ``under`` takes red edges from both and a blue edge to ``mid``.  Each
    source also has its own small diamond into ``mid``, through the corners
    ``small = (left blue, left red, right red, right blue)``.
    """
    lb, lr, rr, rb = small
    arrows = [
        (left, over, BLUE), (right, over, BLUE), (over, mid, RED),
        (left, under, RED), (right, under, RED), (under, mid, BLUE),
        (left, lb, BLUE), (left, lr, RED), (lb, mid, RED), (lr, mid, BLUE),
        (right, rr, RED), (right, rb, BLUE), (rr, mid, BLUE), (rb, mid, RED),
    ]
    arrows = [(f"{s}>{r}", s, r, c) for s, r, c in arrows]
    diamonds = [
        (left, over, under, mid), (right, over, under, mid),
        (left, lb, lr, mid), (right, rr, rb, mid),
    ]
    return arrows, diamonds


_SIDES = (
    ("C", "B", "R", "1c", "4", ("CR", "CR1", "BR", "BR1")),
    ("B", "A", "Q", "1b", "3", ("BQ", "BQ1", "AQ", "AQ1")),
    ("A", "C", "P", "1a", "2", ("AP", "AP1", "CP", "CP1")),
)


def lambda_diamond() -> tuple[ColouredGraph, SquareSet]:
    """The 9-vertex piece with sources C, B glued three times into the triangle."""
    return _from_arrows(*_lambda_arrows(*_SIDES[0]))


def triangle() -> tuple[ColouredGraph, SquareSet]:
    """Three copies of the diamond piece glued at their sources in a ring.

    Rotation by a third of a turn sends C -> B -> A -> C.  Small diamond
    vertices are named after the corner and side they sit on (CR, CR1 near
    C on side CR, and so on).
    """
    arrows, diamonds = [], []
    for side in _SIDES:
        a, d = _lambda_arrows(*side)
        arrows += a
        diamonds += d
    return _from_arrows(arrows, diamonds)


# a third of a turn of the triangle, as a vertex permutation
TRIANGLE_ROTATION = {
    "C": "B", "B": "A", "A": "C", "P": "R", "Q": "P", "R": "Q",
    "1a": "1c", "1c": "1b", "1b": "1a", "2": "4", "4": "3", "3": "2",
    "CP": "BR", "CP1": "BR1", "AP": "CR", "AP1": "CR1", "BQ": "AP", "BQ1": "AP1",
    "AQ": "CP", "AQ1": "CP1", "CR": "BQ", "CR1": "BQ1", "BR": "AQ", "BR1": "AQ1",
}


def triangle_pieces() -> list[tuple[ColouredGraph, SquareSet]]:
    """The diamond piece on side R, then its images on sides P and Q."""
    from .surgery import relabel

    back = {v: k for k, v in TRIANGLE_ROTATION.items()}
    pieces = [lambda_diamond()]
    for _ in range(2):
        pieces.append(relabel(*pieces[-1], back, lambda e, r, s: f"{s}>{r}"))
    return pieces


def rigid19() -> tuple[ColouredGraph, SquareSet]:
    """Five unit squares in a row sharing side corners, and a reversed one
    hanging from the bottom of the second, glued sink to sink."""
    arrows, diamonds = [], []

    def v(x, y):
        return f"{x},{y}"

    for dx in (0, 2, 4, 6, 8):
        top, left, right, bottom = v(dx + 1, 2), v(dx, 1), v(dx + 2, 1), v(dx + 1, 0)
        arrows += [
            (f"{top}>{left}", top, left, RED), (f"{right}>{bottom}", right, bottom, RED),
            (f"{top}>{right}", top, right, BLUE), (f"{left}>{bottom}", left, bottom, BLUE),
        ]
        diamonds.append((top, left, right, bottom))
    top, left, right, bottom = v(3, 0), v(2, -1), v(4, -1), v(3, -2)
    arrows += [
        (f"{left}>{top}", left, top, RED), (f"{bottom}>{right}", bottom, right, RED),
        (f"{right}>{top}", right, top, BLUE), (f"{bottom}>{left}", bottom, left, BLUE),
    ]
    diamonds.append((bottom, left, right, top))
    return _from_arrows(arrows, diamonds)


def c1club() -> tuple[ColouredGraph, SquareSet]:
    """Club of lunar(1) with r0 blue, r1 red, edge colours read arc-first."""
    from .club import build_club, colour_club

    club = colour_club(build_club(lunar(1)), {"r0": BLUE, "r1": RED}, convention="arc")
    return club.graph, club.squares


# -- registry ----------------------------------------------------------------------

POLYHEDRAL = {"lunar", "pizza", "random"}
COLOURED = {"omega", "hypercube", "sphere", "cube3", "degenerate4", "triangle",
            "lambda", "rigid19", "c1club"}


@dataclass(frozen=True)
class FixtureSpec:
    family: str
    parameters: tuple = ()

    def __post_init__(self):
        if self.family not in POLYHEDRAL | COLOURED:
            raise ValueError(f"unknown family {self.family}")


def generate(spec: FixtureSpec):
    """PolyhedralGraph for polyhedral families, (graph, squares) otherwise."""
    f, p = spec.family, spec.parameters
    if f == "lunar":
        return lunar(*p)
    if f == "pizza":
        return pizza(*p)
    if f == "random":
        return random_polyhedral(*p)
    if f == "omega":
        k, *m = p
        return omega(k, m)
    if f == "hypercube":
        return hypercube(*p)
    return {
        "sphere": sphere2, "cube3": cube3, "degenerate4": degenerate4,
        "triangle": triangle, "lambda": lambda_diamond, "rigid19": rigid19,
        "c1club": c1club,
    }[f]()


def random_family(max_points: int = 8, per_size: int = 3):
    """A fixed sample of random polyhedral graphs with 3..max_points points."""
    out = []
    for n in range(3, max_points + 1):
        for seed in range(per_size):
            g = random_polyhedral(n, seed=1000 * n + seed)
            assert validate(g).ok
            out.append(g)
    return out
