import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hrtrees.analysis import (
    automorphisms,
    euler_identity,
    has_fixed_point_free_of_order,
    is_isomorphic,
    is_planar,
)
from hrtrees.club import club_of
from hrtrees.fixtures import (
    c1club,
    cube3,
    hypercube,
    lunar,
    omega,
    pizza,
    rigid19,
    sphere2,
    triangle,
)
from hrtrees.skeleton import ColouredGraph, Edge, SquareSet

from oracles import brute_automorphism_count, planar_by_kuratowski


def simple(n, pairs, colour=1):
    vs = tuple(str(i) for i in range(n))
    return ColouredGraph(vs, tuple(Edge(f"{a}-{b}", str(a), str(b), colour) for a, b in pairs))


def test_kuratowski_graphs():
    assert not is_planar(simple(5, itertools.combinations(range(5), 2)))
    assert not is_planar(simple(6, [(a, b) for a in range(3) for b in range(3, 6)]))
    assert is_planar(simple(4, itertools.combinations(range(4), 2)))


def test_petersen_is_not_planar():
    pairs = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    assert not is_planar(simple(10, pairs))


def test_q4_is_not_planar_q3_is():
    assert not is_planar(hypercube(4)[0])
    assert is_planar(hypercube(3)[0])


@pytest.mark.parametrize("g", [lunar(n) for n in range(1, 5)] + [pizza(n) for n in range(1, 6)],
                         ids=str)
def test_clubs_are_planar(g):
    assert is_planar(club_of(g).graph)


def test_planarity_ignores_colours():
    g = hypercube(4)[0]
    mono = ColouredGraph(g.vertices, tuple(Edge(e.id, e.r, e.s, 1) for e in g.edges))
    assert is_planar(mono) == is_planar(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 8), st.data())
def test_planarity_matches_kuratowski_oracle(n, data):
    all_pairs = list(itertools.combinations(range(n), 2))
    keep = data.draw(st.lists(st.booleans(), min_size=len(all_pairs), max_size=len(all_pairs)))
    g = simple(n, [p for p, k in zip(all_pairs, keep) if k])
    assert is_planar(g) == planar_by_kuratowski(g)


def test_rigid19_has_no_symmetry():
    g, sq = rigid19()
    group = automorphisms(g, sq)
    assert len(group) == 1 and group[0].is_identity()
    assert not any(has_fixed_point_free_of_order(g, sq, n) for n in range(2, 5))


def test_triangle_has_fixed_point_free_rotation():
    g, sq = triangle()
    assert has_fixed_point_free_of_order(g, sq, 3)
    assert any(a.order() == 3 for a in automorphisms(g, sq))


def test_colours_pin_the_unit_square():
    assert len(automorphisms(*omega(2, (1, 1)))) == 1


@pytest.mark.parametrize("make", [c1club, sphere2, cube3, lambda: omega(2, (1, 1)),
                                  lambda: hypercube(3)])
def test_group_order_matches_brute_force(make):
    g, sq = make()
    assert len(automorphisms(g, sq)) == brute_automorphism_count(g, sq)


@pytest.mark.parametrize("make", [c1club, sphere2, triangle, lambda: hypercube(3)])
def test_automorphisms_form_a_group(make):
    g, sq = make()
    group = automorphisms(g, sq)

    def key(a):
        return tuple(sorted(a.vertex_map.items())) + tuple(sorted(a.edge_map.items()))

    keys = {key(a) for a in group}
    for a in group:
        assert key(a.inverse()) in keys
        for b in group:
            assert key(a.compose(b)) in keys


def test_one_trees_have_no_fixed_point_free_order_three():
    # a path on three vertices as a 1-coloured graph
    g = ColouredGraph(("x", "y", "z"), (Edge("e", "x", "y", 1), Edge("f", "z", "y", 1)))
    assert not has_fixed_point_free_of_order(g, SquareSet(), 3)


def test_square_preservation_flag():
    g, sq = omega(2, (1, 1))
    assert len(automorphisms(g, SquareSet(), preserve_squares=False)) == 1
    # parallel edges can be swapped when squares are ignored
    g2 = ColouredGraph(("a", "b"), (Edge("x", "a", "b", 1), Edge("y", "a", "b", 1)))
    assert len(automorphisms(g2, SquareSet())) == 2


def test_euler_identity():
    assert euler_identity(c1club()[0])
    assert euler_identity(club_of(pizza(3)).graph)
    assert not euler_identity(omega(2, (5, 3))[0])
    assert not euler_identity(omega(2, (2, 2))[0])


def test_isomorphism_of_relabelled_graph():
    g, sq = cube3()
    h, hsq = hypercube(3)
    assert is_isomorphic(g, sq, h, hsq)
    assert not is_isomorphic(g, sq, *sphere2())
