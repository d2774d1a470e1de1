"""Higher-rank graphs from polyhedral graphs.

Build the quadrangle club of an embedded planar graph, colour it into a
2-, 3- or 4-graph, check the k-graph axioms, and show its fundamental group
is trivial.  Quotients, gluing, cutting, planarity and automorphism search
cover the surrounding examples.
"""

from .analysis import (
    Automorphism,
    automorphisms,
    euler_identity,
    has_fixed_point_free_of_order,
    is_isomorphic,
    is_planar,
    isomorphisms,
)
from .club import (
    KGraphCertificate,
    QuadrangleClub,
    build_club,
    certify,
    club_of,
    colour_club,
    half_arc_conditions,
    quadrangle,
    verify_club_theorem,
)
from .errors import *  # noqa: F401,F403
from .facecolour import FaceColouring, colour_faces, is_proper, two_colour
from .polyhedral import Arc, PolyhedralGraph, boundary_walks, dual, trace_faces, validate
from .pi1 import (
    Pi1Verdict,
    SpanningTree,
    degree_cocycle_essential,
    is_tree,
    left_greedy_tree,
    pi1,
    presentation,
    replay,
    spanning_tree,
    tree_verdict,
)
from .skeleton import (
    ColouredGraph,
    Edge,
    PathClass,
    Square,
    SquareSet,
    check_associative,
    check_complete,
    enumerate_morphisms,
    flip,
    is_connected,
    is_singly_connected,
    opposite,
)
from .surgery import (
    EdgeVertexRelation,
    IsoMap,
    SubgraphMark,
    cut,
    disjoint_union,
    glue,
    is_cohereditary,
    is_hereditary,
    quotient,
    relabel,
)

__version__ = "0.1.0"
