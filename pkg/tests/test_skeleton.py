import pytest
from hypothesis import given, settings, strategies as st

from hrtrees.errors import CyclicSkeleton, MalformedInput, MissingSquare, SameColourAdjacent
from hrtrees.fixtures import c1club, cube3, hypercube, lambda_diamond, omega, sphere2
from hrtrees.skeleton import (
    ColouredGraph,
    Edge,
    Square,
    SquareSet,
    check_associative,
    check_complete,
    enumerate_morphisms,
    flip,
    is_connected,
    is_singly_connected,
    opposite,
    singly_connected_witness,
)

from oracles import class_count


def test_c1_squares_complete():
    g, sq = c1club()
    assert check_complete(g, sq).ok


def test_removing_a_square_leaves_a_gap():
    g, sq = c1club()
    dropped = sq.squares[0]
    r = check_complete(g, SquareSet(sq.squares[1:]))
    assert dropped.top in r.missing and dropped.bottom in r.missing


def test_duplicated_top_is_ambiguous():
    g, sq = c1club()
    q0, q1 = sq.squares[0], sq.squares[1]
    extra = Square(q0.top, q1.bottom)
    r = check_complete(g, SquareSet(sq.squares + (extra,)))
    assert any(path == q0.top for path, _ in r.ambiguous)


def test_dangling_square_is_malformed():
    g, sq = c1club()
    with pytest.raises(MalformedInput):
        check_complete(g, SquareSet(((("nope", "x"), ("y", "z")),)))


def test_square_with_wrong_colours_is_reported():
    g = ColouredGraph(("a", "b", "c", "d"), (
        Edge("f", "a", "b", 1), Edge("h", "b", "d", 2),
        Edge("g", "a", "c", 1), Edge("k", "c", "d", 2)))
    r = check_complete(g, SquareSet(((("f", "h"), ("g", "k")),)))
    assert r.malformed


def test_bad_colour_rejected():
    with pytest.raises(MalformedInput):
        ColouredGraph(("a",), (Edge("e", "a", "a", 0),))


def test_flip_errors():
    g, sq = omega(2, (1, 1))
    top = sq.squares[0].top
    assert flip(g, sq, top, 0) == sq.squares[0].bottom
    g2, sq2 = omega(2, (2, 0))
    with pytest.raises(SameColourAdjacent):
        flip(g2, sq2, tuple(e.id for e in reversed(g2.edges)), 0)
    with pytest.raises(MissingSquare):
        flip(g, SquareSet(), top, 0)


@pytest.mark.parametrize("make", [c1club, sphere2, lambda_diamond], ids=lambda f: f.__name__)
def test_rank_two_is_vacuously_associative(make):
    r = check_associative(*make())
    assert r.ok and r.vacuous


@pytest.mark.parametrize("k", [3, 4])
def test_cubes_are_associative(k):
    r = check_associative(*hypercube(k))
    assert r.ok and not r.vacuous


def test_planar_cube_is_associative():
    r = check_associative(*cube3())
    assert r.ok and r.checked == 6


def test_missing_square_makes_cube_check_undefined():
    g, sq = hypercube(3)
    r = check_associative(g, SquareSet(sq.squares[1:]))
    assert r.undefined and not r.ok


def test_directed_cycle_rejected():
    g = ColouredGraph(("a", "b"), (Edge("x", "a", "b", 1), Edge("y", "b", "a", 2)))
    with pytest.raises(CyclicSkeleton):
        enumerate_morphisms(g, SquareSet(), "a", "b")


def test_omega_hom_sets_are_singletons():
    g, sq = omega(2, (2, 2))
    assert is_singly_connected(g, sq)
    classes = enumerate_morphisms(g, sq, "(0,0)", "(2,2)")
    assert len(classes) == 1
    assert classes[0].degree == (2, 2)
    assert len(classes[0].members) == 6


def test_missing_square_breaks_single_connection():
    g, sq = omega(2, (1, 1))
    u, v, classes = singly_connected_witness(g, SquareSet())
    assert len(classes) == 2


def test_connected():
    assert is_connected(c1club()[0])
    g = ColouredGraph(("a", "b"), ())
    assert not is_connected(g)


def test_opposite_is_an_involution():
    g, sq = c1club()
    g2, sq2 = opposite(*opposite(g, sq))
    assert g2 == g and sq2.keys() == sq.keys()
    assert check_complete(*opposite(g, sq)).ok


@pytest.mark.parametrize("make", [c1club, sphere2, cube3, lambda_diamond, lambda: hypercube(3),
                                  lambda: omega(2, (2, 1))])
def test_class_counts_match_naive_enumeration(make):
    g, sq = make()
    for u in g.vertices:
        for v in g.vertices:
            assert len(enumerate_morphisms(g, sq, u, v)) == class_count(g, sq, u, v)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.data())
def test_dropping_squares_matches_oracle(m1, m2, data):
    g, sq = omega(2, (m1, m2))
    keep = data.draw(st.lists(st.booleans(), min_size=len(sq), max_size=len(sq)))
    sub = SquareSet(tuple(q for q, k in zip(sq, keep) if k))
    u, v = "(0,0)", f"({m1},{m2})"
    assert len(enumerate_morphisms(g, sub, u, v)) == class_count(g, sub, u, v)
