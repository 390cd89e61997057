import itertools

import pytest
from hypothesis import assume, given

from graphprod import catalog
from graphprod.centralizer import basic_form, centralizer, centralizer_graph, rank, root
from graphprod.labeled_graph import INF, LabeledGraph
from graphprod.oracle import brute_centralizer, enumerate_ball, enumerate_finite_group, subgroup_ball
from graphprod.words import (
    WordError,
    commutes,
    cyclically_reduce,
    element,
    identity,
    length,
    order_of,
    power,
    support,
    vertex,
)
from strategies import graph_and_elements

FREE2 = catalog.discrete(2)
P3 = catalog.path(3)
SQ = LabeledGraph([(v, INF) for v in "axby"], [("a", "x"), ("x", "b"), ("b", "y"), ("y", "a")])


def E(graph, text):
    return element(graph, text)


# -- roots -------------------------------------------------------------------------


def test_root_examples():
    r = root(E(catalog.discrete(1), "a^4"))
    assert (str(r.root), r.exponent) == ("a", 4)
    r = root(E(FREE2, "a b a b"))
    assert (str(r.root), r.exponent) == ("a b", 2)
    r = root(E(catalog.discrete(1, 5), "a^2"))
    assert (str(r.root), r.exponent) == ("a^3", 4)
    with pytest.raises(WordError):
        root(identity(FREE2))


def test_root_oracles_for_examples():
    g = E(FREE2, "a b a b")
    ball = enumerate_ball(FREE2, 2)
    best = max(n for n in range(1, length(g) + 1) for s in ball.elements if power(s, n) == g)
    assert best == 2
    # cyclic group of order 5: largest n < 5 with a solution of s^n = a^2
    c5 = catalog.discrete(1, 5)
    g = E(c5, "a^2")
    grp = enumerate_finite_group(c5)
    best = max(n for n in range(1, 5) for s in grp.elements if power(s, n) == g)
    assert best == 4


def test_root_conjugated_element():
    g = E(FREE2, "b a^3 b^-1")
    r = root(g)
    assert (str(r.root), r.exponent) == ("b a b^-1", 3)


# -- basic forms ----------------------------------------------------------------------


def test_basic_form_examples():
    k2 = catalog.complete(2)
    bf = basic_form(E(k2, "a^2 b^3"))
    assert [(str(r), m) for r, m in bf.factors] == [("a", 2), ("b", 3)]
    assert bf.link_part == k2.link_of_set({"a", "b"}) == frozenset()
    bf = basic_form(E(FREE2, "a b"))
    assert [(str(r), m) for r, m in bf.factors] == [("a b", 1)]
    assert FREE2.complement().components({"a", "b"}) == [{"a", "b"}]
    bf = basic_form(vertex(P3, "b"))
    assert [(str(r), m) for r, m in bf.factors] == [("b", 1)]
    with pytest.raises(WordError):
        basic_form(E(FREE2, "a b a^-1"))
    with pytest.raises(WordError):
        basic_form(identity(FREE2))


# -- centralizers -----------------------------------------------------------------------


def test_centralizer_of_vertex_on_path():
    pres = centralizer(vertex(P3, "b"))
    assert [str(f) for f in pres.cyclic_factors] == ["b"]
    assert pres.link_vertices == {"a", "c"}


def test_centralizer_square_against_ball():
    g = E(SQ, "a b")
    pres = centralizer(g)
    assert [str(f) for f in pres.cyclic_factors] == ["a b"]
    assert pres.link_vertices == {"x", "y"}
    brute = brute_centralizer(SQ, g, 3)
    assert brute == subgroup_ball(pres.generators(), 3)


def test_centralizer_conjugation_covariance():
    g = LabeledGraph([("a", INF), ("b", INF), ("c", INF)], [("a", "b")])
    base = centralizer(vertex(g, "b"))
    conj = centralizer(E(g, "c b c^-1"))
    c = vertex(g, "c")
    assert conj.generators() == [h.conjugate_by(c) for h in base.generators()]


def test_centralizer_identity():
    assert centralizer(identity(P3)).whole_group


# -- centralizer graphs and rank ------------------------------------------------------


def test_centralizer_graph_examples():
    K = centralizer_graph(vertex(P3, "b"))
    assert len(K.graph) == 1 + len(P3.link("b"))
    K = centralizer_graph(E(SQ, "a b"))
    assert K.graph.names == ("x1", "x", "y")
    assert K.graph.order("x1") == INF
    assert K.graph.link("x1") == {"x", "y"}


def test_rank_examples():
    assert rank(vertex(P3, "b")) == 3
    assert rank(vertex(P3, "a")) == 2
    g, h = E(P3, "a c"), E(P3, "c a b")
    assert rank(g) == rank(g.conjugate_by(h))
    assert rank(identity(P3)) == 3


# -- invariants --------------------------------------------------------------------------


def _cr(x):
    return cyclically_reduce(x)[1]


@given(graph_and_elements(k=1, max_vertices=5))
def test_basic_form_reconstruction(data):
    g, x = data
    u = _cr(x)
    assume(u.syllables)
    bf = basic_form(u)
    assert bf.reconstruct() == u
    supports = [support(r) for r, _ in bf.factors]
    assert supports == list(bf.components)
    assert bf.components == tuple(g.components(support(u), complement=True))
    for (r, _), (s, _) in itertools.combinations(bf.factors, 2):
        assert commutes(r, s)
    for r, m in bf.factors:
        assert m >= 1
        if order_of(r) == INF:
            assert root(r).exponent == 1


@given(graph_and_elements(k=1, max_vertices=5))
def test_centralizer_generators_commute(data):
    g, x = data
    assume(x.syllables)
    for h in centralizer(x).generators():
        assert commutes(h, x)


@given(graph_and_elements(k=1, max_vertices=5, max_size=5))
def test_rank_inequality(data):
    g, x = data
    u = _cr(x)
    assume(u.syllables)
    ru = rank(u)
    for y in support(u):
        assert ru <= rank(vertex(g, y))


@given(graph_and_elements(k=1, max_vertices=5))
def test_finite_order_components_are_singletons(data):
    g, x = data
    u = _cr(x)
    assume(u.syllables and order_of(u) != INF)
    for comp in g.components(support(u), complement=True):
        assert len(comp) == 1


@given(graph_and_elements(k=1, max_vertices=4, max_size=6))
def test_root_power_and_maximality(data):
    g, x = data
    assume(x.syllables)
    r = root(x)
    assert power(r.root, r.exponent) == x
    if order_of(x) != INF:
        assert 1 <= r.exponent < max(order_of(x), 2)
        return
    # roots of x are conjugates of roots of its CR part; search a bounded ball
    u = _cr(x)
    ball = enumerate_ball(g, min(3, length(u)))
    for m in range(r.exponent + 1, length(u) + 1):
        assert not any(power(s, m) == u for s in ball.elements)


@given(graph_and_elements(k=1, max_vertices=4, max_size=6, labels=(2, 3, 4, 5, 8, 9)))
def test_finite_root_against_brute_force(data):
    g, x = data
    u = _cr(x)
    assume(u.syllables and order_of(u) != INF)
    sub = g.induced_subgraph(support(u))
    grp = enumerate_finite_group(sub)
    target = element(sub, str(u))
    o = order_of(u)
    brute = max((n for n in range(1, o) for s in grp.elements if power(s, n) == target), default=1)
    assert root(u).exponent == brute
