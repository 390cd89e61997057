"""Basic forms, roots, centralizers and centralizer graphs of elements."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .labeled_graph import INF, LabeledGraph
from .words import (
    GroupElement,
    WordError,
    _first_available,
    _last_available,
    _peel_letter,
    cyclically_reduce,
    identity,
    invert,
    is_cyclically_reduced,
    multiply,
    normalize,
    order_of,
    power,
    product,
    support,
    vertex,
)


@dataclass(frozen=True)
class BasicForm:
    """u = prod root_i ** exponent_i over pairwise commuting roots."""

    factors: tuple[tuple[GroupElement, int], ...]
    components: tuple[frozenset[str], ...]
    link_part: frozenset[str]

    def reconstruct(self) -> GroupElement:
        graph = self.factors[0][0].graph
        return product(graph, (power(r, m) for r, m in self.factors))


@dataclass(frozen=True)
class CentralizerPresentation:
    """C(g) = w (<u_1> x ... x <u_n> x <lk Sigma>) w^-1."""

    graph: LabeledGraph
    conjugator: GroupElement
    cyclic_factors: tuple[GroupElement, ...]
    link_vertices: frozenset[str]
    whole_group: bool = False

    def generators(self) -> list[GroupElement]:
        w = self.conjugator
        gens = [f.conjugate_by(w) for f in self.cyclic_factors]
        gens += [vertex(self.graph, z).conjugate_by(w) for z in self.graph.sort(self.link_vertices)]
        return gens


@dataclass(frozen=True)
class Root:
    root: GroupElement
    exponent: int
    unique: bool = True


@dataclass(frozen=True)
class CentralizerGraph:
    graph: LabeledGraph
    fresh: tuple[str, ...]
    link_vertices: tuple[str, ...]


def _divisors_desc(n: int) -> list[int]:
    return sorted((d for d in range(1, n + 1) if n % d == 0), reverse=True)


def _cyclic_normalize(p: GroupElement) -> tuple[GroupElement, GroupElement]:
    """(c, q) with p = c q c^-1 and no vertex both a first and a last syllable of q."""
    graph = p.graph
    c = identity(graph)
    q = p
    while True:
        x = _peel_letter(q)
        if x is not None:
            xe = vertex(graph, *x)
            q = multiply(multiply(invert(xe), q), xe)
            c = multiply(c, xe)
            continue
        firsts = _first_available(q)
        rotated = False
        for j in _last_available(q):
            v, f = q.syllables[j]
            if any(i != j and q.syllables[i][0] == v for i in firsts):
                t = vertex(graph, v, f)
                q = multiply(multiply(t, q), invert(t))
                c = multiply(c, invert(t))
                rotated = True
                break
        if not rotated:
            return c, q


def _connected_root(p: GroupElement) -> tuple[GroupElement, int]:
    """Root of a CR element whose support is connected in the complement graph."""
    graph = p.graph
    supp = support(p)
    if len(supp) == 1:
        (v, e), = p.syllables
        if graph.orders[v] == INF:
            return vertex(graph, v, 1 if e > 0 else -1), abs(e)
        return vertex(graph, v), e
    c, q = _cyclic_normalize(p)
    counts: dict[str, int] = {}
    for v, _ in q.syllables:
        counts[v] = counts.get(v, 0) + 1
    g = 0
    for k in counts.values():
        g = math.gcd(g, k)
    for n in _divisors_desc(g):
        taken: dict[str, int] = {}
        sub = []
        for v, e in q.syllables:
            if taken.get(v, 0) < counts[v] // n:
                taken[v] = taken.get(v, 0) + 1
                sub.append((v, e))
        s = normalize(graph, sub)
        if power(s, n) == q:
            return s.conjugate_by(c), n
    raise AssertionError("unreachable: n = 1 always succeeds")


def basic_form(u: GroupElement) -> BasicForm:
    graph = u.graph
    if not u.syllables:
        raise WordError("the identity has no basic form")
    if not is_cyclically_reduced(u):
        raise WordError(f"{u} is not cyclically reduced")
    supp = support(u)
    comps = graph.components(supp, complement=True)
    factors = []
    for comp in comps:
        p = normalize(graph, [s for s in u.syllables if s[0] in comp])
        factors.append(_connected_root(p))
    return BasicForm(tuple(factors), tuple(comps), graph.link_of_set(supp))


def centralizer(g: GroupElement) -> CentralizerPresentation:
    graph = g.graph
    if not g.syllables:
        return CentralizerPresentation(graph, g, (), graph.vertex_set, whole_group=True)
    w, u = cyclically_reduce(g)
    bf = basic_form(u)
    pres = CentralizerPresentation(graph, w, tuple(r for r, _ in bf.factors), bf.link_part)
    for h in pres.generators():
        if multiply(h, g) != multiply(g, h):
            raise AssertionError(f"centralizer generator {h} does not commute with {g}")
    return pres


def centralizer_graph(u: GroupElement) -> CentralizerGraph:
    """K(u): a clique on fresh vertices, one per basic-form root, joined to lk Sigma."""
    graph = u.graph
    bf = basic_form(u)
    link = graph.sort(bf.link_part)
    fresh = []
    k = 1
    while len(fresh) < len(bf.factors):
        name = f"x{k}"
        while name in graph.index:
            name = "_" + name
        fresh.append(name)
        k += 1
    verts = []
    for name, (r, _) in zip(fresh, bf.factors):
        o = order_of(r)
        if o != INF and len(support(r)) != 1:
            raise AssertionError(f"finite-order root {r} has more than one vertex in its support")
        verts.append((name, o))
    verts += [(z, graph.orders[z]) for z in link]
    edges = [(a, b) for i, a in enumerate(fresh) for b in fresh[i + 1 :]]
    edges += [(a, z) for a in fresh for z in link]
    edges += [e for e in graph.sorted_edges() if e[0] in bf.link_part and e[1] in bf.link_part]
    K = LabeledGraph(verts, edges, check=False)
    return CentralizerGraph(K, tuple(fresh), tuple(link))


def rank(g: GroupElement) -> int:
    """Number of vertices of K(u) for the CR part u of g; |V| for the identity."""
    if not g.syllables:
        return len(g.graph)
    _, u = cyclically_reduce(g)
    bf = basic_form(u)
    return len(bf.factors) + len(bf.link_part)


def root(g: GroupElement) -> Root:
    """A root r of g with g = r^n and n maximal.

    Infinite order: n >= 1 maximal. Finite order: n maximal with 1 <= n < o(g).
    `unique` is False when another element of <supp g> conjugated the same way
    realises the same maximal n.
    """
    graph = g.graph
    if not g.syllables:
        raise WordError("the identity has no root")
    w, u = cyclically_reduce(g)
    bf = basic_form(u)
    infinite = [(r, m) for r, m in bf.factors if order_of(r) == INF]
    finite = [(r, m) for r, m in bf.factors if order_of(r) != INF]

    def solvable(n):
        return all(m % math.gcd(n, order_of(r)) == 0 for r, m in finite)

    if infinite:
        G = 0
        for _, m in infinite:
            G = math.gcd(G, m)
        n = next(d for d in _divisors_desc(G) if solvable(d))
    else:
        N = order_of(u)
        n = next((d for d in range(N - 1, 0, -1) if solvable(d)), 1)
    parts = []
    unique = True
    for r, m in bf.factors:
        o = order_of(r)
        if o == INF:
            parts.append(power(r, m // n))
        else:
            sols = [k for k in range(o) if (n * k - m) % o == 0]
            unique = unique and len(sols) == 1
            parts.append(power(r, sols[0]))
    r = product(graph, parts).conjugate_by(w)
    assert power(r, n) == g
    return Root(r, n, unique)
