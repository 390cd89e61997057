import pytest
from hypothesis import given

from graphprod import catalog
from graphprod.automorphisms import identity_automorphism
from graphprod.generators import factor_automorphism, generating_set, transvection_map
from graphprod.labeled_graph import INF, LabeledGraph
from graphprod.oracle import (
    brute_automorphism_group,
    brute_centralizer,
    closure,
    enumerate_ball,
    enumerate_finite_group,
    image_key,
)
from graphprod.words import WordError, element, identity, invert, length, multiply, vertex
from strategies import graphs


def free_product_count(letter_counts, radius):
    """Number of elements of length <= radius in a free product of cyclic groups.

    letter_counts[i][k] = number of non-trivial elements of the i-th factor of length k.
    Reduced words alternate between factors, so count by last factor and length.
    """
    n = len(letter_counts)
    ends = [[0] * (radius + 1) for _ in range(n)]
    for r in range(1, radius + 1):
        for i in range(n):
            total = 0
            for k, c in letter_counts[i].items():
                if k > r:
                    continue
                prev = 1 if k == r else sum(ends[j][r - k] for j in range(n) if j != i)
                total += c * prev
            ends[i][r] = total
    return 1 + sum(ends[i][r] for i in range(n) for r in range(1, radius + 1))


def test_ball_examples():
    assert enumerate_ball(catalog.path(3), 0).elements == {identity(catalog.path(3))}
    z = catalog.discrete(1)
    ball = enumerate_ball(z, 3)
    assert {str(x) for x in ball.elements} == {"1", "a", "a^-1", "a^2", "a^-2", "a^3", "a^-3"}
    g = LabeledGraph([("a", 2), ("b", 3)])
    ball = enumerate_ball(g, 2)
    assert len(ball) == free_product_count([{1: 1}, {1: 2}], 2) == 8


@pytest.mark.parametrize("radius", [1, 2, 3, 4, 5])
def test_ball_matches_free_product_growth(radius):
    g = LabeledGraph([("a", 2), ("b", 3), ("c", 4)])
    counts = [{1: 1}, {1: 2}, {1: 2, 2: 1}]
    assert len(enumerate_ball(g, radius)) == free_product_count(counts, radius)


def test_finite_group_examples():
    assert len(enumerate_finite_group(catalog.complete(3, [2, 3, 4]))) == 24
    assert len(enumerate_finite_group(catalog.discrete(1, 5))) == 5
    klein = enumerate_finite_group(catalog.complete(2, 2))
    assert len(klein) == 4
    assert all(klein.mul(i, i) == klein.index[identity(catalog.complete(2, 2))] for i in range(4))
    with pytest.raises(WordError):
        enumerate_finite_group(catalog.path(3, 2))
    with pytest.raises(WordError):
        enumerate_finite_group(catalog.complete(2, [2, INF]))


def test_finite_group_table_axioms():
    t = enumerate_finite_group(catalog.complete(2, [2, 4]))
    n = len(t)
    e = t.index[identity(catalog.complete(2, [2, 4]))]
    for i in range(n):
        assert t.mul(e, i) == i == t.mul(i, e)
        assert any(t.mul(i, j) == e for j in range(n))
        for j in range(n):
            for k in range(n):
                assert t.mul(t.mul(i, j), k) == t.mul(i, t.mul(j, k))


def test_brute_centralizer_examples():
    g = catalog.path(3)
    x = element(g, "a b")
    cent = brute_centralizer(g, x, 3)
    assert identity(g) in cent and x in cent
    assert vertex(g, "c") not in cent


def test_brute_automorphism_group_examples():
    assert len(brute_automorphism_group(catalog.discrete(1, 3))) == 2
    assert len(brute_automorphism_group(catalog.complete(2, 2))) == 6
    # |Aut(Z/2 x Z/4)| = 8 and |Aut Z/3| = 2
    assert len(brute_automorphism_group(catalog.complete(2, [2, 4]))) == 8
    assert len(brute_automorphism_group(catalog.complete(3, [2, 3, 4]))) == 16


def test_closure_examples():
    z = catalog.discrete(1)
    assert len(closure([identity_automorphism(z)])) == 1
    assert len(closure([factor_automorphism(z, "a", -1)])) == 2
    tri = catalog.complete(3, [2, 3, 4])
    cl = closure([g.automorphism for g in generating_set(tri)])
    brute = {image_key([m[v] for v in tri.names]) for m in brute_automorphism_group(tri)}
    assert cl.complete and cl.elements == brute and len(brute) == 16


def test_closure_reports_partial_result():
    f2 = catalog.discrete(2)
    cl = closure([transvection_map(f2, "a", "b", 1)], bound=50)
    assert not cl.complete and len(cl) > 50


# -- invariants -----------------------------------------------------------------------


@given(graphs(max_vertices=3))
def test_ball_growth(g):
    balls = [enumerate_ball(g, r) for r in range(4)]
    infinite = not g.is_complete() or INF in g.orders.values()
    for small, big in zip(balls, balls[1:]):
        assert small.elements <= big.elements
        if infinite:
            assert len(small) < len(big)
    for b in balls:
        assert identity(g) in b
        for x in b.elements:
            assert invert(x) in b and length(x) <= b.radius


@given(graphs(max_vertices=3, labels=(2, 3, 4)))
def test_finite_group_agrees_with_ball(g):
    if not g.is_complete():
        return
    grp = enumerate_finite_group(g)
    r = sum(o - 1 for o in g.orders.values())
    assert set(grp.elements) == enumerate_ball(g, r).elements
    for i, x in enumerate(grp.elements[:6]):
        for j, y in enumerate(grp.elements[:6]):
            assert grp.elements[grp.mul(i, j)] == multiply(x, y)
