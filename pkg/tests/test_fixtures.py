import hashlib
import json

import pytest

from hrtrees import io
from hrtrees.fixtures import (
    FixtureSpec,
    c1club,
    cube3,
    degenerate4,
    generate,
    hypercube,
    lambda_diamond,
    omega,
    random_family,
    rigid19,
    sphere2,
    triangle,
)
from hrtrees.skeleton import check_associative, check_complete

COLOURED = {
    "sphere2": sphere2, "cube3": cube3, "degenerate4": degenerate4, "triangle": triangle,
    "lambda": lambda_diamond, "rigid19": rigid19, "c1club": c1club,
    "hypercube3": lambda: hypercube(3), "hypercube4": lambda: hypercube(4),
}


@pytest.mark.parametrize("name", sorted(COLOURED))
def test_coloured_fixtures_have_complete_associative_squares(name):
    g, sq = COLOURED[name]()
    assert check_complete(g, sq).ok
    assert check_associative(g, sq).ok


@pytest.mark.parametrize("name,v,e,s", [
    ("sphere2", 6, 8, 4), ("cube3", 8, 12, 6), ("degenerate4", 15, 24, 12),
    ("triangle", 24, 42, 12), ("lambda", 9, 14, 4), ("rigid19", 19, 24, 6),
    ("c1club", 6, 8, 4), ("hypercube4", 16, 32, 24),
])
def test_sizes(name, v, e, s):
    g, sq = COLOURED[name]()
    assert (len(g.vertices), len(g.edges), len(sq)) == (v, e, s)


def test_omega_small_cases():
    g, sq = omega(2, (1, 1))
    assert len(sq) == 1
    g0, sq0 = omega(3, (0, 0, 0))
    assert g0.vertices == ("(0,0,0)",) and not g0.edges
    g53, _ = omega(2, (5, 3))
    assert len(g53.vertices) == 24 and len(g53.edges) == 5 * 4 + 6 * 3


def test_omega_argument_checks():
    with pytest.raises(ValueError):
        omega(5, (1,) * 5)
    with pytest.raises(ValueError):
        omega(2, (1,))


def test_degenerate4_colours_do_not_meet():
    g, sq = degenerate4()
    assert g.colours == (1, 2, 3, 4)
    for q in sq:
        assert {g.colour(x) for x in q.edges()} != {3, 4}


def test_random_family_is_reproducible():
    a = [io.polyhedral_to_json(g) for g in random_family(5, 2)]
    b = [io.polyhedral_to_json(g) for g in random_family(5, 2)]
    assert a == b


# transcriptions of the drawn figures, locked by checksum
CHECKSUMS = {
    "cube3": "766ce37e152b46f3",
    "degenerate4": "864a26346dddd87a",
    "rigid19": "8df0d6a8b55c894f",
    "sphere2": "802238f520c33438",
    "triangle": "80c0f55cf5a25436",
}


def digest(name):
    doc = io.coloured_to_json(*COLOURED[name]())
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()[:16]


@pytest.mark.parametrize("name", sorted(CHECKSUMS))
def test_figure_transcriptions_locked(name):
    assert digest(name) == CHECKSUMS[name]


def test_generate_dispatch():
    assert generate(FixtureSpec("lunar", (2,))).faces == ("r0", "r1", "r2")
    g, sq = generate(FixtureSpec("omega", (2, 1, 1)))
    assert len(sq) == 1
    with pytest.raises(ValueError):
        FixtureSpec("nonsense")
