import pytest
from hypothesis import assume, given, strategies as st

from graphprod import catalog
from graphprod.automorphisms import (
    Automorphism,
    AutomorphismError,
    apply,
    compose,
    conjugating_set,
    decompose_over_generators,
    equal,
    identity_automorphism,
    induced_graph_automorphism,
    inner_automorphism,
    inverse,
    is_conjugating,
    is_quasi_simple,
    is_simple,
    is_well_defined,
    simple_set,
)
from graphprod.generators import (
    factor_automorphism,
    generating_set,
    graph_automorphism_lift,
    partial_conjugation,
    transvection_map,
    with_inverses,
)
from graphprod.labeled_graph import INF, LabeledGraph
from graphprod.words import cyclic_support, element, invert, multiply, order_of, support, vertex
from strategies import elements, graphs

FREE2 = catalog.discrete(2)
FLIP = catalog.triangle_with_tail()
P5 = catalog.path(5)


def E(graph, text):
    return element(graph, text)


@st.composite
def automorphisms(draw, max_vertices=4, max_len=4, kinds=None):
    g = draw(graphs(max_vertices=max_vertices))
    gens = generating_set(g)
    if kinds is not None:
        gens = [x for x in gens if x.descriptor.kind in kinds]
    gens = with_inverses(gens)
    auto = identity_automorphism(g)
    if gens:
        for i in draw(st.lists(st.integers(0, len(gens) - 1), max_size=max_len)):
            auto = auto.compose(gens[i].automorphism)
    return auto


# -- well-definedness ------------------------------------------------------------------


def test_well_defined_examples():
    g = LabeledGraph([("a", 2), ("b", 4)], [("a", "b")])
    assert is_well_defined(g, {v: vertex(g, v) for v in g.names})
    bad = is_well_defined(g, {"a": E(g, "a b"), "b": vertex(g, "b")})
    assert not bad and "order" in bad.witness
    assert order_of(E(g, "a b")) == 4
    assert is_well_defined(g, {"a": E(g, "a b^2"), "b": vertex(g, "b")})


def test_non_commuting_images_rejected():
    g = LabeledGraph([("a", INF), ("b", INF), ("c", INF)], [("a", "b")])
    rep = is_well_defined(g, {"a": vertex(g, "c"), "b": vertex(g, "b"), "c": vertex(g, "a")})
    assert not rep and "commute" in rep.witness


def test_build_checks_inverse():
    g = FREE2
    with pytest.raises(AutomorphismError):
        Automorphism.build(g, {"a": E(g, "a b")}, {"a": E(g, "a b")})


# -- application and composition ---------------------------------------------------------


def test_apply_examples():
    phi = factor_automorphism(FREE2, "a", -1)
    assert str(apply(phi, vertex(FREE2, "a"))) == "a^-1"
    assert compose(phi, inverse(phi)) == identity_automorphism(FREE2)
    sigma = partial_conjugation(P5, {"a"}, "c")
    assert str(apply(sigma, vertex(P5, "a"))) == "c a c^-1"
    assert equal(sigma.inverse().compose(sigma), identity_automorphism(P5))


def test_json_roundtrip():
    tau = transvection_map(FREE2, "a", "b", 1)
    again = Automorphism.from_json(FREE2, '{"images": {"a": "a b"}, "inverse": {"a": "a b^-1"}}')
    assert again == tau
    assert Automorphism.from_dict(FREE2, tau.to_dict()) == tau


# -- conjugating / simple / quasi-simple -------------------------------------------------------


def test_conjugating_set_examples():
    inner = inner_automorphism(FLIP, E(FLIP, "d a b^-1"))
    assert conjugating_set(inner) == FLIP.vertex_set and is_conjugating(inner)
    phi = factor_automorphism(FLIP, "c", -1)
    assert conjugating_set(phi) == {"a", "b", "d"}


def test_simple_set_examples():
    assert simple_set(identity_automorphism(P5)) == P5.vertex_set
    sigma = partial_conjugation(P5, {"a"}, "c")
    assert simple_set(sigma) == P5.vertex_set
    # direct predicate evaluation for sigma
    for v in P5.names:
        cs = cyclic_support(sigma(vertex(P5, v)))
        assert cs == {v}
    tau = transvection_map(FREE2, "a", "b", 1)
    assert cyclic_support(tau(vertex(FREE2, "a"))) == {"a", "b"}
    assert "a" in simple_set(tau)


def test_quasi_simple_examples():
    assert is_quasi_simple(identity_automorphism(FLIP))
    for w in ("a d", "b c^-1 d a", "d^2 b"):
        inner = inner_automorphism(FLIP, E(FLIP, w))
        assert is_quasi_simple(inner)
        for v in FLIP.names:
            assert cyclic_support(inner(vertex(FLIP, v))) == {v}
            assert v in FLIP.gamma_v(v)


def test_induced_graph_automorphism_examples():
    inner = inner_automorphism(FLIP, E(FLIP, "d a"))
    assert induced_graph_automorphism(inner).is_identity()
    swap = FLIP.labeled_automorphisms()[1]
    lift = graph_automorphism_lift(swap)
    assert induced_graph_automorphism(lift) == swap
    both = inner.compose(lift)
    assert induced_graph_automorphism(both) == swap


# -- decomposition -------------------------------------------------------------------------------


def test_decompose_examples():
    gens = [g.automorphism for g in with_inverses(generating_set(FREE2))]
    assert decompose_over_generators(identity_automorphism(FREE2), gens) == []
    for i, g in enumerate(gens):
        path = decompose_over_generators(g, gens, 1)
        assert path is not None and len(path) == 1
        assert gens[path[0]] == g
    # conjugating a by b through inversions and transvection inverses
    phi = factor_automorphism(FREE2, "a", -1)
    tinv = transvection_map(FREE2, "a", "b", -1)
    sigma = partial_conjugation(FREE2, {"a"}, "b")
    small = [phi, tinv]
    path = decompose_over_generators(sigma, small, 4)
    assert path is not None and len(path) <= 4


# -- invariants -----------------------------------------------------------------------------------


@given(automorphisms(), st.data())
def test_apply_is_homomorphism(auto, data):
    g = auto.graph
    x = data.draw(elements(g, 5))
    y = data.draw(elements(g, 5))
    assert auto(multiply(x, y)) == multiply(auto(x), auto(y))
    assert auto(invert(x)) == invert(auto(x))
    assert order_of(auto(x)) == order_of(x)
    assert auto.inverse()(auto(x)) == x


@given(automorphisms())
def test_conjugating_set_of_inverse(auto):
    assert conjugating_set(auto) == conjugating_set(auto.inverse())


@given(automorphisms(), st.data())
def test_inner_twist_keeps_csupp(auto, data):
    g = auto.graph
    w = data.draw(elements(g, 5))
    twisted = inner_automorphism(g, w).compose(auto)
    for v in g.names:
        assert cyclic_support(twisted(vertex(g, v))) == cyclic_support(auto(vertex(g, v)))
    assert simple_set(twisted) == simple_set(auto)


@given(automorphisms(max_len=5))
def test_simple_inverse_is_quasi_simple(auto):
    assume(is_simple(auto))
    assert is_quasi_simple(auto.inverse())


@given(automorphisms())
def test_conjugating_rigidity(auto):
    gamma = induced_graph_automorphism(auto)
    for v in auto.graph.names:
        assert gamma(v) in cyclic_support(auto(vertex(auto.graph, v)))


@given(automorphisms(max_len=5, kinds={"partial_conjugation"}))
def test_support_shared_along_components(auto):
    g = auto.graph
    assume(is_quasi_simple(auto))
    for z in g.names:
        for comp in g.components_minus_star(z):
            flags = {z in support(auto(vertex(g, x))) for x in comp}
            assert len(flags) == 1
