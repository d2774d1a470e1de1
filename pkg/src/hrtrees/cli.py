"""Command-line front end.

Every INPUT is a JSON file or a fixture spec ``family[:p1,p2,...]``, for
instance ``lunar:3``, ``omega:2,5,3`` or ``triangle``.  Exit status is 0 for
success or a positive verdict, 1 for a negative verdict and 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .analysis import automorphisms, euler_identity, is_planar
from .club import build_club, colour_club, verify_club_theorem
from .errors import (
    ColourClash,
    CompatibilityError,
    CyclicSkeleton,
    DisconnectedInput,
    Infeasible,
    IsoNotSquarePreserving,
    MalformedInput,
    NotBipartiteDual,
    NotCohereditary,
    NotHereditary,
    TheoremViolation,
)
from .facecolour import colour_faces
from .fixtures import FixtureSpec, generate
from .pi1 import tree_verdict
from .polyhedral import PolyhedralGraph, validate
from .surgery import EdgeVertexRelation, cut, glue, quotient

INPUT_ERRORS = (MalformedInput, CyclicSkeleton, DisconnectedInput, CompatibilityError,
                NotHereditary, NotCohereditary, IsoNotSquarePreserving, ValueError)
NEGATIVE = (ColourClash, Infeasible, NotBipartiteDual, TheoremViolation)


def _fixture(text: str):
    family, _, params = text.partition(":")
    values = tuple(int(x) for x in params.split(",") if x) if params else ()
    out = generate(FixtureSpec(family, values))
    return out if isinstance(out, PolyhedralGraph) else (*out, None)


def load_input(text: str):
    """PolyhedralGraph or ``(graph, squares, provenance)``."""
    if Path(text).exists():
        return io.load(text)
    try:
        return _fixture(text)
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"{text} is neither a file nor a fixture spec ({exc})") from None


def _coloured(text: str):
    x = load_input(text)
    if isinstance(x, PolyhedralGraph):
        raise MalformedInput(f"{text} is a polyhedral graph; a coloured graph is needed")
    return x


def _polyhedral(text: str) -> PolyhedralGraph:
    x = load_input(text)
    if not isinstance(x, PolyhedralGraph):
        raise MalformedInput(f"{text} is a coloured graph; a polyhedral graph is needed")
    return x


def _colouring_arg(args):
    return io.colouring_from_json(io.read_json(args.colouring)) if args.colouring else None


def _club(args):
    g = _polyhedral(args.input)
    report = validate(g)
    if not report.ok:
        raise MalformedInput("; ".join(v.detail for v in report.violations))
    club = colour_club(build_club(g), _colouring_arg(args), args.convention)
    return club.opposite() if getattr(args, "opposite", False) else club


class Output:
    def __init__(self, args):
        self.args = args
        self.text = []

    def line(self, s=""):
        self.text.append(str(s))

    def emit(self, doc=None):
        if self.args.format == "json" and doc is not None:
            body = io.dumps(doc)
        else:
            body = "\n".join(self.text) + ("\n" if self.text else "")
        target = getattr(self.args, "output", None)
        if target:
            Path(target).write_text(body)
        else:
            sys.stdout.write(body)


# -- commands --------------------------------------------------------------------

def cmd_validate(args, out):
    g = _polyhedral(args.input)
    r = validate(g)
    doc = {
        "ok": r.ok,
        "violations": [{"code": v.code, "detail": v.detail} for v in r.violations],
        "faces": r.face_count,
        "parallelArcs": [list(p) for p in r.parallel_arcs],
    }
    out.line("valid" if r.ok else "invalid")
    for v in r.violations:
        out.line(f"  {v.code}: {v.detail}")
    for p in r.parallel_arcs:
        out.line(f"  note: parallel arcs {' '.join(p)}")
    out.emit(doc)
    return 0 if r.ok else 2


def cmd_colour(args, out):
    g = _polyhedral(args.input)
    supplied = _colouring_arg(args)
    c = colour_faces(g, max_colours=args.colours, supplied=supplied)
    for f, k in c.assignment.items():
        out.line(f"{f} {k}")
    out.line(f"palette {c.palette_size}")
    out.emit(io.colouring_to_json(c))
    return 0


def cmd_club(args, out):
    club = _club(args)
    cert = verify_club_theorem(club)
    doc = io.coloured_to_json(club.graph, club.squares, club.provenance)
    doc["certificate"] = cert.summary()
    out.line(f"{len(club.graph.vertices)} vertices, {len(club.graph.edges)} edges, "
             f"{len(club.squares)} squares")
    for k, v in cert.summary().items():
        out.line(f"  {k}: {'yes' if v else 'no'}")
    out.emit(doc)
    return 0 if cert.ok else 1


def _verdict_for(text: str, args):
    x = load_input(text)
    if isinstance(x, PolyhedralGraph):
        args.input = text
        club = _club(args)
        return tree_verdict(club), club.graph, club.squares
    g, sq, _ = x
    return tree_verdict(g, sq), g, sq


def _verdict_doc(v):
    return {
        "status": v.status,
        "tree": [{"edge": e, "weight": v.tree.weights[e]} for e in v.tree.edges],
        "killed": sorted(v.killed),
        "trace": [{"action": s.action, "generator": s.generator, "relation": s.relation,
                   **({"into": s.into} if s.into else {})} for s in v.trace],
        "residual": {
            "generators": list(v.residual.generators),
            "relations": [{"lhs": list(r.lhs), "rhs": list(r.rhs)} for r in v.residual.relations],
        },
    }


def cmd_pi1(args, out):
    v, _, _ = _verdict_for(args.input, args)
    out.line("tree:")
    for e in v.tree.edges:
        out.line(f"  {e} weight {v.tree.weights[e]}")
    out.line(f"killed: {' '.join(sorted(v.killed))}")
    out.line("trace:")
    for s in v.trace:
        extra = f" into {s.into}" if s.into else ""
        out.line(f"  {s.action} {s.generator}{extra} by relation {s.relation}")
    out.line(f"verdict: {v.status}")
    if not v.trivial:
        out.line(f"residual generators: {' '.join(v.residual.generators)}")
    out.emit(_verdict_doc(v))
    return 0 if v.trivial else 1


def cmd_tree_check(args, out):
    g = _polyhedral(args.input)
    report = validate(g)
    if not report.ok:
        raise MalformedInput("; ".join(v.detail for v in report.violations))
    club = colour_club(build_club(g), _colouring_arg(args), args.convention)
    cert = verify_club_theorem(club)
    verdict = tree_verdict(club)
    planar = is_planar(club.graph)
    euler = euler_identity(club.graph)
    ok = cert.ok and verdict.trivial and planar and euler
    doc = {"kgraph": cert.summary(), "pi1": verdict.status, "planar": planar,
           "euler": euler, "ok": ok}
    parts = [
        "trivial π₁" if verdict.trivial else "π₁ not shown trivial",
        "planar" if planar else "not planar",
        "euler ok" if euler else "euler fails",
    ]
    out.line(", ".join(parts))
    if not cert.ok:
        bad = [k for k, v in cert.summary().items() if not v]
        out.line(f"k-graph checks failing: {', '.join(bad)}")
    out.emit(doc)
    return 0 if ok else 1


def _write_coloured(out, g, sq):
    out.line(f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(sq)} squares")
    doc = io.coloured_to_json(g, sq)
    if out.args.format == "text" and getattr(out.args, "output", None):
        out.text = [io.dumps(doc).rstrip("\n")]
    out.emit(doc)
    return 0


def cmd_glue(args, out):
    g1, sq1, _ = _coloured(args.first)
    g2, sq2, _ = _coloured(args.second)
    iso = io.iso_from_json(io.read_json(args.iso))
    m1 = io.mark_from_json(io.read_json(args.mark1))
    m2 = io.mark_from_json(io.read_json(args.mark2))
    return _write_coloured(out, *glue(g1, sq1, m1, g2, sq2, m2, iso))


def cmd_cut(args, out):
    g, sq, _ = _coloured(args.input)
    mark = io.mark_from_json(io.read_json(args.mark))
    return _write_coloured(out, *cut(g, sq, mark, args.keep))


def cmd_quotient(args, out):
    g, sq, _ = _coloured(args.input)
    d = io.read_json(args.relation)
    rel = EdgeVertexRelation(tuple(map(tuple, d.get("vertexPairs", ()))),
                             tuple(map(tuple, d.get("edgePairs", ()))))
    return _write_coloured(out, *quotient(g, sq, rel))


def _analyse_one(text, args):
    x = load_input(text)
    if isinstance(x, PolyhedralGraph):
        args.input = text
        club = _club(args)
        g, sq = club.graph, club.squares
    else:
        g, sq, _ = x
    group = automorphisms(g, sq, preserve_squares=not args.ignore_squares)
    fpf = sorted({a.order() for a in group if not a.fixed_vertices() and a.order() > 1})
    return {
        "input": text,
        "planar": is_planar(g),
        "eulerIdentity": euler_identity(g),
        "autGroupOrder": len(group),
        "fixedPointFreeOrders": fpf,
    }


def cmd_analyse(args, out):
    docs = [_analyse_one(t, args) for t in args.inputs]
    for d in docs:
        out.line(f"{d['input']}: planar {str(d['planar']).lower()}, "
                 f"euler identity {str(d['eulerIdentity']).lower()}, "
                 f"|Aut| = {d['autGroupOrder']}, "
                 f"fixed-point-free orders {d['fixedPointFreeOrders'] or 'none'}")
    out.emit(docs if len(docs) > 1 else docs[0])
    return 0


def cmd_generate(args, out):
    x = generate(FixtureSpec(args.family, tuple(args.params)))
    if isinstance(x, PolyhedralGraph):
        doc = io.polyhedral_to_json(x)
    else:
        doc = io.coloured_to_json(*x)
    args.format = "json"
    out.emit(doc)
    return 0


def cmd_export(args, out):
    x = load_input(args.input)
    if args.to == "json":
        doc = io.polyhedral_to_json(x) if isinstance(x, PolyhedralGraph) else io.coloured_to_json(*x)
        out.text = [io.dumps(doc).rstrip("\n")]
    elif isinstance(x, PolyhedralGraph):
        if args.club:
            club = _club(args)
            g = club.graph
        else:
            if args.to == "tikz":
                raise MalformedInput("TikZ export needs a coloured graph; pass --club")
            out.text = [io.polyhedral_to_dot(x).rstrip("\n")]
            args.format = "text"
            out.emit()
            return 0
    else:
        g = x[0]
    if args.to == "dot":
        out.text = [io.coloured_to_dot(g).rstrip("\n")]
    elif args.to == "tikz":
        out.text = [io.coloured_to_tikz(g).rstrip("\n")]
    args.format = "text"
    out.emit()
    return 0


# -- parser ----------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hrtrees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(fn=fn)
        return sp

    def club_opts(sp):
        sp.add_argument("--colouring", help="facecolouring.v1 file")
        sp.add_argument("--convention", choices=("point", "arc"), default="point")

    sp = add("validate", cmd_validate, "check a polyhedral graph")
    sp.add_argument("input")
    sp = add("colour", cmd_colour, "properly colour the faces")
    sp.add_argument("input")
    sp.add_argument("--colours", type=int, default=4)
    sp.add_argument("--colouring", help="check this assignment instead")
    sp.add_argument("-o", "--output")
    sp = add("club", cmd_club, "build, colour and verify the quadrangle club")
    sp.add_argument("input")
    club_opts(sp)
    sp.add_argument("--opposite", action="store_true")
    sp.add_argument("-o", "--output")
    sp = add("pi1", cmd_pi1, "spanning tree, presentation and reduction")
    sp.add_argument("input")
    club_opts(sp)
    sp = add("tree-check", cmd_tree_check, "full pipeline on a polyhedral graph")
    sp.add_argument("input")
    club_opts(sp)
    sp = add("glue", cmd_glue, "glue two coloured graphs along marked subgraphs")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--iso", required=True)
    sp.add_argument("--mark1", required=True)
    sp.add_argument("--mark2", required=True)
    sp.add_argument("-o", "--output")
    sp = add("cut", cmd_cut, "restrict to or remove a marked subgraph")
    sp.add_argument("input")
    sp.add_argument("--mark", required=True)
    sp.add_argument("--keep", choices=("inside", "outside"), default="inside")
    sp.add_argument("-o", "--output")
    sp = add("quotient", cmd_quotient, "quotient by a generated relation")
    sp.add_argument("input")
    sp.add_argument("--relation", required=True, help="{vertexPairs, edgePairs}")
    sp.add_argument("-o", "--output")
    sp = add("analyse", cmd_analyse, "planarity, edge count identity and automorphisms")
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("--ignore-squares", action="store_true")
    club_opts(sp)
    sp = add("generate", cmd_generate, "write a fixture as JSON")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("-o", "--output")
    sp = add("export", cmd_export, "DOT or TikZ drawing")
    sp.add_argument("input")
    sp.add_argument("--to", choices=("dot", "tikz", "json"), default="dot")
    sp.add_argument("--club", action="store_true", help="draw the club of a polyhedral graph")
    club_opts(sp)
    sp.add_argument("-o", "--output")
    return p


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    out = Output(args)
    try:
        return args.fn(args, out)
    except NEGATIVE as exc:
        print(f"hrtrees: {exc}", file=sys.stderr)
        return 1
    except INPUT_ERRORS as exc:
        print(f"hrtrees: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
