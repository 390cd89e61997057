"""Small named labeled graphs used by the tests, scripts and README."""
from __future__ import annotations

import itertools
from typing import Sequence

from .labeled_graph import INF, LabeledGraph

NAMES = "abcdefghijklmnopqrstuvwxyz"


def _labels(n: int, orders) -> list:
    if orders is None or not isinstance(orders, Sequence) or isinstance(orders, str):
        return [INF if orders is None else orders] * n
    if len(orders) != n:
        raise ValueError("need one order per vertex")
    return list(orders)


def path(n: int, orders=None) -> LabeledGraph:
    vs = NAMES[:n]
    return LabeledGraph(zip(vs, _labels(n, orders)), zip(vs, vs[1:]))


def cycle(n: int, orders=None) -> LabeledGraph:
    vs = NAMES[:n]
    return LabeledGraph(zip(vs, _labels(n, orders)), [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete(n: int, orders=None) -> LabeledGraph:
    vs = NAMES[:n]
    return LabeledGraph(zip(vs, _labels(n, orders)), itertools.combinations(vs, 2))


def discrete(n: int, orders=None) -> LabeledGraph:
    vs = NAMES[:n]
    return LabeledGraph(zip(vs, _labels(n, orders)))


def triangle_with_tail(orders=None) -> LabeledGraph:
    """Triangle abc with a pendant d at c; its only non-trivial symmetry swaps a and b."""
    return LabeledGraph(zip("abcd", _labels(4, orders)), [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")])


def square(orders=None) -> LabeledGraph:
    return cycle(4, orders)


def star(leaves: int, orders=None) -> LabeledGraph:
    """Centre 'a' joined to leaves b, c, ..."""
    vs = NAMES[: leaves + 1]
    return LabeledGraph(zip(vs, _labels(leaves + 1, orders)), [("a", v) for v in vs[1:]])


def small_complete_finite(max_vertices: int = 3, labels=(2, 3, 4, 5), max_size: int = 60):
    """All complete graphs with 1..max_vertices vertices, labels from `labels`, |G| <= max_size."""
    for k in range(1, max_vertices + 1):
        for orders in itertools.product(labels, repeat=k):
            size = 1
            for o in orders:
                size *= o
            if size <= max_size:
                yield complete(k, list(orders))
