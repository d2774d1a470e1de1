"""JSON file formats plus DOT and TikZ drawings.

``polyhedral.v1``: points, arcs ``{id, r, s}``, rotation, optional side map
``{arc: {L, R}}`` and optional face order.  ``colouredgraph.v1``: vertices,
edges ``{id, r, s, colour}``, squares ``{top, bottom}`` and an optional
provenance list.  ``facecolouring.v1``: a plain ``{face: colour}`` object.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import MalformedInput
from .facecolour import COLOUR_NAMES, FaceColouring
from .polyhedral import Arc, PolyhedralGraph
from .skeleton import ColouredGraph, Edge, Square, SquareSet
from .surgery import IsoMap, SubgraphMark

DOT_STYLE = {1: "solid", 2: "dashed", 3: "dotted", 4: "dashdotted"}
TIKZ_STYLE = {1: "", 2: ", dashed", 3: ", dotted", 4: ", dash dot"}


def polyhedral_to_json(g: PolyhedralGraph) -> dict:
    out = {
        "format": "polyhedral.v1",
        "points": list(g.points),
        "arcs": [{"id": a.id, "r": a.r, "s": a.s} for a in g.arcs],
    }
    if g.rotation is not None:
        out["rotation"] = {p: list(v) for p, v in g.rotation.items()}
    if g.side is not None:
        out["side"] = {a: {"L": lf, "R": rf} for a, (lf, rf) in g.side.items()}
        out["faces"] = list(g.faces)
    return out


def polyhedral_from_json(d: dict) -> PolyhedralGraph:
    try:
        arcs = tuple(Arc(a["id"], a["r"], a["s"]) for a in d["arcs"])
        return PolyhedralGraph(tuple(d["points"]), arcs, d.get("rotation"),
                               d.get("side"), tuple(d.get("faces", ())))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"not a polyhedral.v1 document: {exc}") from None


def coloured_to_json(g: ColouredGraph, sq: SquareSet, provenance=None) -> dict:
    out = {
        "format": "colouredgraph.v1",
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "r": e.r, "s": e.s, "colour": e.colour} for e in g.edges],
        "squares": [{"top": list(q.top), "bottom": list(q.bottom)} for q in sq],
    }
    if provenance is not None:
        out["provenance"] = [{"arc": a, "end": end} for a, end in provenance]
    return out


def coloured_from_json(d: dict):
    """``(graph, squares, provenance or None)``."""
    try:
        edges = tuple(Edge(e["id"], e["r"], e["s"], e["colour"]) for e in d["edges"])
        graph = ColouredGraph(tuple(d["vertices"]), edges)
        squares = SquareSet(tuple(Square(q["top"], q["bottom"]) for q in d.get("squares", ())))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"not a colouredgraph.v1 document: {exc}") from None
    for q in squares:
        if len(q.top) != 2 or len(q.bottom) != 2:
            raise MalformedInput("square sides must have two edges")
    prov = d.get("provenance")
    if prov is not None:
        prov = tuple((p["arc"], p["end"]) for p in prov)
    return graph, squares, prov


def colouring_to_json(c: FaceColouring) -> dict:
    return dict(c.assignment)


def colouring_from_json(d: dict) -> dict:
    if not isinstance(d, dict) or not all(isinstance(v, int) for v in d.values()):
        raise MalformedInput("a face colouring maps face ids to integers")
    return dict(d)


def iso_from_json(d: dict) -> IsoMap:
    return IsoMap(dict(d.get("vertexMap", {})), dict(d.get("edgeMap", {})))


def mark_from_json(d: dict) -> SubgraphMark:
    return SubgraphMark(d.get("vertices", ()), d.get("edges", ()))


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load(path):
    """A PolyhedralGraph or a ``(graph, squares, provenance)`` triple, by content."""
    doc = read_json(path)
    if isinstance(doc, dict) and "points" in doc:
        return polyhedral_from_json(doc)
    if isinstance(doc, dict) and "vertices" in doc:
        return coloured_from_json(doc)
    raise MalformedInput(f"{path} is neither polyhedral.v1 nor colouredgraph.v1")


# -- drawings --------------------------------------------------------------------

def _q(x: str) -> str:
    return '"' + x.replace('"', r'\"') + '"'


def polyhedral_to_dot(g: PolyhedralGraph) -> str:
    lines = ["graph polyhedral {"]
    lines += [f"  {_q(p)};" for p in g.points]
    lines += [f"  {_q(a.s)} -- {_q(a.r)} [label={_q(a.id)}];" for a in g.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloured_to_dot(g: ColouredGraph) -> str:
    """Arrows point from source to range, styled by colour."""
    lines = ["digraph coloured {"]
    lines += [f"  {_q(v)};" for v in g.vertices]
    for e in g.edges:
        name = COLOUR_NAMES.get(e.colour, "black")
        style = DOT_STYLE.get(e.colour, "bold")
        lines.append(f"  {_q(e.s)} -> {_q(e.r)} [label={_q(e.id)}, color={name}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tex(x: str) -> str:
    return "".join("\\" + c if c in "_&%$#{}" else c for c in x)


def coloured_to_tikz(g: ColouredGraph) -> str:
    """Vertices on a circle; club vertices are drawn by kind (point, arc, face)."""
    n = max(len(g.vertices), 1)
    shape = {"p": "circle, fill=black, inner sep=1pt", "a": "rectangle, draw", "f": "ellipse, draw"}
    name = {v: f"v{i}" for i, v in enumerate(g.vertices)}
    lines = [r"\begin{tikzpicture}[>=stealth]"]
    for i, v in enumerate(g.vertices):
        t = 2 * math.pi * i / n
        kind = v.split(":", 1)[0] if ":" in v else ""
        style = shape.get(kind, "")
        label = v.split(":", 1)[1] if kind in shape else v
        lines.append(
            f"  \\node[{style}] ({name[v]}) at ({3 * math.cos(t):.3f},{3 * math.sin(t):.3f}) "
            f"{{${_tex(label)}$}};")
    for e in g.edges:
        colour = COLOUR_NAMES.get(e.colour, "black")
        lines.append(f"  \\draw[->, {colour}{TIKZ_STYLE.get(e.colour, '')}] "
                     f"({name[e.s]}) -- ({name[e.r]});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"
