"""Element arithmetic in the graph product W(Gamma, o).

Elements are stored as canonical syllable sequences: reduced (no two syllables
of the same vertex can be shuffled together) and lexicographically least among
all commutation-equivalent reduced sequences, with respect to the vertex
declaration order. Equality of elements is therefore equality of tuples.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .labeled_graph import INF, GraphError, LabeledGraph

Syllable = tuple[str, int]

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


class WordError(ValueError):
    """Malformed word text or arithmetic across different graphs."""


class ReductionOrderError(WordError):
    """No reordering of the letters of w gives non-decreasing reduction types.

    Only happens with finite labels >= 3, where one letter can carry a syllable
    past o/2 (e.g. a * a = a^-1 for o(a) = 3) and the five types stop being exhaustive.
    """


def reduce_exponent(graph: LabeledGraph, v: str, e: int) -> int:
    o = graph.orders[v]
    return e if o == INF else e % o


def syllable_length(graph: LabeledGraph, v: str, e: int) -> int:
    """Word length of v^e over the letters v, v^-1."""
    o = graph.orders[v]
    if o == INF:
        return abs(e)
    e %= o
    return min(e, o - e)


def _insert(graph: LabeledGraph, word: list[list], v: str, e: int) -> None:
    """Right-multiply a reduced syllable list by v^e, keeping it reduced."""
    e = reduce_exponent(graph, v, e)
    if e == 0:
        return
    adj = graph._adj[v]
    i = len(word) - 1
    while i >= 0:
        u = word[i][0]
        if u == v:
            merged = reduce_exponent(graph, v, word[i][1] + e)
            if merged == 0:
                # the rest stays reduced: dropping a syllable that could be
                # shuffled to the end leaves a prefix of a reduced word
                del word[i]
            else:
                word[i][1] = merged
            return
        if u not in adj:
            break
        i -= 1
    word.append([v, e])


def _canonical_order(graph: LabeledGraph, word: list[list]) -> tuple[Syllable, ...]:
    """Lexicographically least linear extension of the syllable heap."""
    idx = graph.index
    adj = graph._adj
    remaining = list(range(len(word)))
    out = []
    while remaining:
        best = None
        best_key = None
        for pos, i in enumerate(remaining):
            v = word[i][0]
            free = True
            for j in remaining[:pos]:
                u = word[j][0]
                if u == v or u not in adj[v]:
                    free = False
                    break
            if free:
                k = idx[v]
                if best_key is None or k < best_key:
                    best, best_key = pos, k
        i = remaining.pop(best)
        out.append((word[i][0], word[i][1]))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class GroupElement:
    graph: LabeledGraph
    syllables: tuple[Syllable, ...]

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.syllables == other.syllables and self.graph == other.graph

    def __hash__(self):
        return hash(self.syllables)

    def __repr__(self):
        return f"<{self}>"

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(v if e == 1 else f"{v}^{e}" for v, e in self.syllables)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __pow__(self, n: int) -> "GroupElement":
        return power(self, n)

    def inverse(self) -> "GroupElement":
        return invert(self)

    def conjugate_by(self, w: "GroupElement") -> "GroupElement":
        """w self w^-1."""
        return multiply(multiply(w, self), invert(w))

    @property
    def support(self) -> frozenset[str]:
        return support(self)

    def is_identity(self) -> bool:
        return not self.syllables


def identity(graph: LabeledGraph) -> GroupElement:
    return GroupElement(graph, ())


def vertex(graph: LabeledGraph, v: str, e: int = 1) -> GroupElement:
    graph._require(v)
    return normalize(graph, [(v, e)])


def normalize(graph: LabeledGraph, raw: Iterable[Syllable]) -> GroupElement:
    word: list[list] = []
    for v, e in raw:
        if v not in graph.index:
            raise GraphError(f"unknown vertex {v!r}")
        _insert(graph, word, v, e)
    return GroupElement(graph, _canonical_order(graph, word))


def parse_word(graph: LabeledGraph, text: str) -> list[Syllable]:
    """Tokens `name` or `name^k` separated by whitespace; "" and "1" mean the identity."""
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise WordError(f"malformed token {tok!r}")
        name, exp = m.group(1), m.group(2)
        if name not in graph.index:
            raise GraphError(f"unknown vertex {name!r}")
        k = 1 if exp is None else int(exp)
        if k == 0:
            raise WordError(f"zero exponent in {tok!r}")
        out.append((name, k))
    return out


def element(graph: LabeledGraph, text: str) -> GroupElement:
    return normalize(graph, parse_word(graph, text))


def _same_graph(g: GroupElement, h: GroupElement):
    if g.graph is not h.graph and g.graph != h.graph:
        raise WordError("elements belong to different graph products")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _same_graph(g, h)
    if not h.syllables:
        return g
    if not g.syllables:
        return h
    graph = g.graph
    word = [[v, e] for v, e in g.syllables]
    for v, e in h.syllables:
        _insert(graph, word, v, e)
    return GroupElement(graph, _canonical_order(graph, word))


def product(graph: LabeledGraph, elements: Iterable[GroupElement]) -> GroupElement:
    return reduce(multiply, elements, identity(graph))


def invert(g: GroupElement) -> GroupElement:
    graph = g.graph
    word = [[v, reduce_exponent(graph, v, -e)] for v, e in reversed(g.syllables)]
    return GroupElement(graph, _canonical_order(graph, word))


def power(g: GroupElement, n: int) -> GroupElement:
    if n < 0:
        return power(invert(g), -n)
    result = identity(g.graph)
    base = g
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def length(g: GroupElement) -> int:
    return sum(syllable_length(g.graph, v, e) for v, e in g.syllables)


def support(g: GroupElement) -> frozenset[str]:
    return frozenset(v for v, _ in g.syllables)


def commutes(g: GroupElement, h: GroupElement) -> bool:
    return multiply(g, h) == multiply(h, g)


def letters(g: GroupElement) -> list[Syllable]:
    """Expand into letters v^{+-1} along a minimal-length spelling."""
    out = []
    for v, e in g.syllables:
        o = g.graph.orders[v]
        if o != INF and e > o - e:
            e = e - o
        s = 1 if e > 0 else -1
        out.extend([(v, s)] * abs(e))
    return out


# -- first / last letters -------------------------------------------------


def _first_available(g: GroupElement) -> list[int]:
    graph = g.graph
    out = []
    for i, (v, _) in enumerate(g.syllables):
        if all(u != v and graph.adjacent(u, v) for u, _ in g.syllables[:i]):
            out.append(i)
    return out


def _last_available(g: GroupElement) -> list[int]:
    graph = g.graph
    out = []
    n = len(g.syllables)
    for i, (v, _) in enumerate(g.syllables):
        if all(u != v and graph.adjacent(u, v) for u, _ in g.syllables[i + 1 : n]):
            out.append(i)
    return out


def _shortens(graph, v, e, d) -> bool:
    """|v^(e+d)| == |v^e| - 1."""
    return syllable_length(graph, v, e + d) == syllable_length(graph, v, e) - 1


def first_letters(g: GroupElement) -> list[Syllable]:
    """Letters x with g = x g' and |g'| = |g| - 1."""
    out = []
    for i in _first_available(g):
        v, e = g.syllables[i]
        for s in (1, -1):
            if _shortens(g.graph, v, e, -s) and (v, s) not in out:
                out.append((v, s))
    return out


def last_letters(g: GroupElement) -> list[Syllable]:
    """Letters x with g = g' x and |g'| = |g| - 1."""
    out = []
    for i in _last_available(g):
        v, e = g.syllables[i]
        for s in (1, -1):
            if _shortens(g.graph, v, e, -s) and (v, s) not in out:
                out.append((v, s))
    return out


def _peel_letter(g: GroupElement):
    """A letter x with g = x g' x^-1 and |g| = |g'| + 2, or None."""
    graph = g.graph
    firsts = _first_available(g)
    lasts = _last_available(g)
    for i in firsts:
        v, e = g.syllables[i]
        for j in lasts:
            if j == i or g.syllables[j][0] != v:
                continue
            f = g.syllables[j][1]
            for s in (1, -1):
                if _shortens(graph, v, e, -s) and _shortens(graph, v, f, s):
                    return (v, s)
    return None


def cyclically_reduce(g: GroupElement) -> tuple[GroupElement, GroupElement]:
    """Return (w, u) with g = w u w^-1, |g| = 2|w| + |u| and u cyclically reduced."""
    graph = g.graph
    w = identity(graph)
    u = g
    while True:
        x = _peel_letter(u)
        if x is None:
            return w, u
        xe = vertex(graph, *x)
        u = multiply(multiply(invert(xe), u), xe)
        w = multiply(w, xe)


def is_cyclically_reduced(g: GroupElement) -> bool:
    return _peel_letter(g) is None


def cyclic_support(g: GroupElement) -> frozenset[str]:
    return support(cyclically_reduce(g)[1])


def cr_part(g: GroupElement) -> GroupElement:
    return cyclically_reduce(g)[1]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def order_of(g: GroupElement):
    """Order of g: a positive int, or INF."""
    if not g.syllables:
        return 1
    graph = g.graph
    u = cr_part(g)
    supp = support(u)
    if not graph.is_complete(supp) or any(graph.orders[v] == INF for v in supp):
        return INF
    n = 1
    for v, e in u.syllables:
        o = graph.orders[v]
        n = _lcm(n, o // math.gcd(e, o))
    return n


# -- reduction types --------------------------------------------------------


def reduction_type(u: GroupElement, x: Syllable) -> tuple[int, GroupElement]:
    """Classify the step u -> x u x^-1 into one of the five reduction types.

    `x` is a letter (vertex, +1 or -1). Types are checked in the order 1, 0, 2, 3
    and type 4 is the fallback.
    """
    graph = u.graph
    v, s = x
    xe = vertex(graph, v, s)
    xinv = invert(xe)
    result = multiply(multiply(xe, u), xinv)
    if all(graph.commute(y, v) for y in support(u)):
        return 1, result
    if length(result) == length(u) - 2:
        # u = x^-1 u' x reduced
        return 0, result
    firsts = first_letters(u)
    lasts = last_letters(u)
    inv_letter = (v, -s)
    if inv_letter in firsts:
        rest = multiply(xe, u)
        if x not in last_letters(rest):
            return 2, result
    if x in lasts:
        rest = multiply(u, xinv)  # u = rest x
        if inv_letter not in first_letters(rest):
            return 3, result
    return 4, result


@dataclass(frozen=True)
class ConjugationDecomposition:
    w4: GroupElement
    w3: GroupElement
    w2: GroupElement
    w1: GroupElement
    steps: tuple  # (letter, type) in order of application

    def parts(self) -> tuple[GroupElement, GroupElement, GroupElement, GroupElement]:
        return self.w4, self.w3, self.w2, self.w1

    def product(self) -> GroupElement:
        return product(self.w4.graph, self.parts())


def conjugation_decomposition(u: GroupElement, w: GroupElement) -> ConjugationDecomposition:
    """Split w = w4 w3 w2 w1 so that conjugating u letter by letter (rightmost
    letters first) passes through reduction types 1, then 2, then 3, then 4.

    Raises ReductionOrderError when no such ordering exists, which needs a
    finite label >= 3 (for o(a) = 8, u = a^-2 b, w = a^-3 gives types 4, 4, 2).
    """
    graph = u.graph
    _same_graph(u, w)
    if not is_cyclically_reduced(u):
        raise WordError(f"{u} is not cyclically reduced")
    failed: set = set()

    def search(rest: GroupElement, cur: GroupElement, stage: int, trail: list):
        if not rest.syllables:
            return list(trail)
        key = (rest.syllables, cur.syllables, stage)
        if key in failed:
            return None
        options = []
        for x in last_letters(rest):
            t, nxt = reduction_type(cur, x)
            if t >= stage and t >= 1:
                options.append((t, x, nxt))
        options.sort(key=lambda o: o[0])
        for t, x, nxt in options:
            xe = vertex(graph, *x)
            trail.append((x, t))
            found = search(multiply(rest, invert(xe)), nxt, t, trail)
            if found is not None:
                return found
            trail.pop()
        failed.add(key)
        return None

    steps = search(w, u, 1, [])
    if steps is None:
        raise ReductionOrderError(f"no ordered reduction sequence for w={w}, u={u}")
    parts = {k: identity(graph) for k in (1, 2, 3, 4)}
    for x, t in steps:
        parts[t] = multiply(vertex(graph, *x), parts[t])
    return ConjugationDecomposition(parts[4], parts[3], parts[2], parts[1], tuple(steps))


def random_raw_word(graph: LabeledGraph, rng, n: int, max_exp: int = 3) -> list[Syllable]:
    out = []
    for _ in range(n):
        v = rng.choice(graph.names)
        e = rng.choice([k for k in range(-max_exp, max_exp + 1) if k != 0])
        out.append((v, e))
    return out


def random_element(graph: LabeledGraph, rng, n: int, max_exp: int = 2) -> GroupElement:
    return normalize(graph, random_raw_word(graph, rng, n, max_exp))

