"""Brute-force ground truth for small instances.

Everything here works by enumeration and deliberately avoids the structure
theory used elsewhere in the package, so it can serve as an independent check.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .automorphisms import Automorphism, compose_images
from .labeled_graph import INF, LabeledGraph
from .words import GroupElement, WordError, identity, invert, length, multiply, order_of, power, vertex

DEFAULT_CLOSURE_BOUND = 10**6


@dataclass(frozen=True)
class Ball:
    radius: int
    elements: frozenset
    distance: dict = field(hash=False, compare=False, default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements


def _letters(graph: LabeledGraph) -> list[GroupElement]:
    out = []
    for v in graph.names:
        for s in (1, -1):
            g = vertex(graph, v, s)
            if g not in out:
                out.append(g)
    return out


def enumerate_ball(graph: LabeledGraph, radius: int) -> Ball:
    """All elements of word length <= radius, by BFS on the Cayley graph."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    start = identity(graph)
    dist = {start: 0}
    frontier = [start]
    letters = _letters(graph)
    for r in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for x in letters:
                h = multiply(g, x)
                if h not in dist:
                    dist[h] = r
                    nxt.append(h)
        frontier = nxt
    return Ball(radius, frozenset(dist), dist)


@dataclass(frozen=True)
class FiniteGroupTable:
    elements: tuple[GroupElement, ...]
    index: dict = field(hash=False, compare=False)
    table: tuple[tuple[int, ...], ...] = field(hash=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]


def _require_finite(graph: LabeledGraph):
    if not graph.is_complete() or any(o == INF for o in graph.orders.values()):
        raise WordError("the group is infinite: need a complete graph with finite labels")


def enumerate_finite_group(graph: LabeledGraph) -> FiniteGroupTable:
    """G as a direct product of finite cyclic groups, with its multiplication table."""
    _require_finite(graph)
    ranges = [range(graph.orders[v]) for v in graph.names]
    elements = []
    for exps in itertools.product(*ranges):
        g = identity(graph)
        for v, e in zip(graph.names, exps):
            g = multiply(g, vertex(graph, v, e))
        elements.append(g)
    index = {g: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise AssertionError("distinct exponent tuples gave equal elements")
    table = tuple(tuple(index[multiply(g, h)] for h in elements) for g in elements)
    return FiniteGroupTable(tuple(elements), index, table)


def brute_centralizer(graph: LabeledGraph, g: GroupElement, radius: int, ball: Ball | None = None) -> frozenset:
    """Elements of the radius ball that commute with g."""
    if ball is None or ball.radius != radius:
        ball = enumerate_ball(graph, radius)
    return frozenset(h for h in ball.elements if multiply(h, g) == multiply(g, h))


def subgroup_ball(gens: Sequence[GroupElement], radius: int, cap: int = 8, slack: int | None = None) -> frozenset:
    """Elements of <gens> of length <= radius reachable by products of at most
    `cap` factors gens^{+-1} whose partial products stay within length radius + slack.

    This is an under-approximation of <gens> intersected with the ball; callers
    compare it against a brute-force superset to certify equality.
    """
    gens = [h for h in gens if h.syllables]
    if not gens:
        return frozenset()
    graph = gens[0].graph
    steps = []
    for h in gens:
        for s in (h, invert(h)):
            if s not in steps:
                steps.append(s)
    if slack is None:
        slack = max(length(h) for h in gens)
    limit = radius + slack
    start = identity(graph)
    seen = {start}
    frontier = [start]
    for _ in range(cap):
        nxt = []
        for g in frontier:
            for s in steps:
                h = multiply(g, s)
                if h not in seen and length(h) <= limit:
                    seen.add(h)
                    nxt.append(h)
        if not nxt:
            break
        frontier = nxt
    return frozenset(h for h in seen if length(h) <= radius)


def image_key(images) -> tuple:
    """Hashable key of a vertex map given as a sequence or an Automorphism."""
    if isinstance(images, Automorphism):
        return images.key
    return tuple(g.syllables for g in images)


def brute_automorphism_group(graph: LabeledGraph) -> list[dict]:
    """Every automorphism of a finite G, as vertex maps."""
    grp = enumerate_finite_group(graph)
    n = len(grp)
    cands = [[h for h in grp.elements if order_of(h) == graph.orders[v]] for v in graph.names]
    out = []
    for imgs in itertools.product(*cands):
        # G is abelian so commuting images are automatic; check surjectivity
        reached = {identity(graph)}
        for h in imgs:
            cyc = [power(h, k) for k in range(order_of(h))]
            reached = {multiply(a, c) for a in reached for c in cyc}
        if len(reached) == n:
            out.append(dict(zip(graph.names, imgs)))
    return out


@dataclass(frozen=True)
class Closure:
    elements: frozenset
    complete: bool

    def __len__(self):
        return len(self.elements)


def closure(autos: Iterable[Automorphism], bound: int = DEFAULT_CLOSURE_BOUND, graph: LabeledGraph | None = None) -> Closure:
    """The set of vertex-image tuples reachable from the identity by composing with autos.

    `complete` is False when more than `bound` tuples were seen; the returned
    set is then only a partial result.
    """
    autos = list(autos)
    if graph is None:
        if not autos:
            raise ValueError("need a graph when no automorphisms are given")
        graph = autos[0].graph
    start = tuple(vertex(graph, v) for v in graph.names)
    seen = {image_key(start)}
    queue = deque([start])
    gens = [a.images for a in autos]
    while queue:
        cur = queue.popleft()
        for g in gens:
            new = compose_images(graph, cur, g)
            k = image_key(new)
            if k in seen:
                continue
            seen.add(k)
            if len(seen) > bound:
                return Closure(frozenset(seen), False)
            queue.append(new)
    return Closure(frozenset(seen), True)


__all__ = [
    "Ball",
    "Closure",
    "DEFAULT_CLOSURE_BOUND",
    "FiniteGroupTable",
    "brute_automorphism_group",
    "brute_centralizer",
    "closure",
    "enumerate_ball",
    "enumerate_finite_group",
    "image_key",
    "subgroup_ball",
]
