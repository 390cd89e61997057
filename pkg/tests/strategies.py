"""Hypothesis strategies for labeled graphs and words."""
import itertools

from hypothesis import strategies as st

from graphprod.labeled_graph import INF, LabeledGraph
from graphprod.words import normalize

LABELS = (2, 3, 4, 5, 8, 9, INF)


@st.composite
def graphs(draw, min_vertices=1, max_vertices=4, labels=LABELS):
    n = draw(st.integers(min_vertices, max_vertices))
    names = "abcdef"[:n]
    orders = draw(st.lists(st.sampled_from(labels), min_size=n, max_size=n))
    pairs = list(itertools.combinations(names, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph(zip(names, orders), [p for p, keep in zip(pairs, mask) if keep])


def raw_words(graph, max_size=8, max_exp=4):
    syl = st.tuples(st.sampled_from(graph.names), st.integers(-max_exp, max_exp).filter(bool))
    return st.lists(syl, max_size=max_size)


def elements(graph, max_size=8, max_exp=4):
    return raw_words(graph, max_size, max_exp).map(lambda raw: normalize(graph, raw))


@st.composite
def graph_and_elements(draw, k=1, max_vertices=4, max_size=8, labels=LABELS):
    g = draw(graphs(max_vertices=max_vertices, labels=labels))
    return (g,) + tuple(draw(elements(g, max_size)) for _ in range(k))
