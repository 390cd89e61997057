"""Labeled graphs (Gamma, o) and the combinatorics built on links and stars."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import networkx as nx

INF = math.inf


class GraphError(ValueError):
    """Malformed graph input or a query about a vertex that does not exist."""


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def prime_of(n: int) -> int:
    """Smallest prime factor of n >= 2 (the prime of a prime power)."""
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def format_order(o) -> str:
    return "inf" if o == INF else str(o)


class LabeledGraph:
    """A finite simple graph whose vertices carry orders in P = {prime powers} U {inf}.

    Vertex declaration order is the total order used for every canonical form.
    Instances are immutable; build new graphs instead of mutating.
    """

    def __init__(self, vertices: Iterable[tuple[str, object]], edges: Iterable[Iterable[str]] = (), check: bool = True):
        verts = [(str(name), _coerce_order(order)) for name, order in vertices]
        self.names: tuple[str, ...] = tuple(n for n, _ in verts)
        self.orders: dict[str, object] = {}
        for n, o in verts:
            self.orders.setdefault(n, o)
        self.index: dict[str, int] = {}
        for i, n in enumerate(self.names):
            self.index.setdefault(n, i)
        edge_list = [tuple(e) for e in edges]
        self._raw_edges = edge_list
        self.edges: frozenset[frozenset[str]] = frozenset(frozenset(e) for e in edge_list)
        self._adj: dict[str, frozenset[str]] = {n: frozenset() for n in self.names}
        tmp: dict[str, set[str]] = {n: set() for n in self.names}
        for e in edge_list:
            if len(e) == 2 and e[0] != e[1] and e[0] in tmp and e[1] in tmp:
                tmp[e[0]].add(e[1])
                tmp[e[1]].add(e[0])
        self._adj = {n: frozenset(s) for n, s in tmp.items()}
        self._hash = hash((self.names, tuple(self.orders[n] for n in self.names), self.edges))
        if check:
            problems = self.problems()
            if problems:
                raise GraphError("; ".join(problems))

    # -- construction / IO -------------------------------------------------

    @classmethod
    def from_dict(cls, data: Mapping) -> "LabeledGraph":
        try:
            verts = [(v["name"], v["order"]) for v in data["vertices"]]
            edges = [tuple(e) for e in data.get("edges", [])]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad graph document: {exc}") from exc
        return cls(verts, edges)

    @classmethod
    def from_json(cls, text: str) -> "LabeledGraph":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc

    @classmethod
    def load(cls, path) -> "LabeledGraph":
        with open(path) as fh:
            return cls.from_json(fh.read())

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"name": n, "order": "inf" if self.orders[n] == INF else self.orders[n]} for n in self.names
            ],
            "edges": [list(e) for e in self.sorted_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def sorted_edges(self) -> list[tuple[str, str]]:
        out = []
        for e in self.edges:
            a, b = sorted(e, key=self.index.__getitem__)
            out.append((a, b))
        return sorted(out, key=lambda e: (self.index[e[0]], self.index[e[1]]))

    # -- basics --------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.names == other.names
            and all(self.orders[n] == other.orders[n] for n in self.names)
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        labels = ", ".join(f"{n}:{format_order(self.orders[n])}" for n in self.names)
        edges = " ".join(f"{a}-{b}" for a, b in self.sorted_edges())
        return f"LabeledGraph({labels} | {edges})"

    def __len__(self):
        return len(self.names)

    def __contains__(self, v):
        return v in self.index

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.names)

    def order(self, v: str):
        self._require(v)
        return self.orders[v]

    def adjacent(self, x: str, y: str) -> bool:
        return y in self._adj[x]

    def commute(self, x: str, y: str) -> bool:
        """Generators at x and y commute: same vertex or an edge."""
        return x == y or y in self._adj[x]

    def sort(self, vs: Iterable[str]) -> list[str]:
        return sorted(vs, key=self.index.__getitem__)

    def _require(self, v):
        if v not in self.index:
            raise GraphError(f"unknown vertex {v!r}")

    def problems(self) -> list[str]:
        out = []
        seen = set()
        for n in self.names:
            if n in seen:
                out.append(f"duplicate vertex {n!r}")
            seen.add(n)
        for n in dict.fromkeys(self.names):
            o = self.orders[n]
            if o != INF and not (isinstance(o, int) and is_prime_power(o)):
                out.append(f"order of {n!r} is {o}, not a prime power or inf")
        edge_seen = set()
        for e in self._raw_edges:
            if len(e) != 2:
                out.append(f"edge {list(e)} does not have two endpoints")
                continue
            a, b = e
            if a == b:
                out.append(f"self-loop at {a!r}")
            for x in (a, b):
                if x not in self.index:
                    out.append(f"edge endpoint {x!r} is not a vertex")
            key = frozenset(e)
            if key in edge_seen and a != b:
                out.append(f"duplicate edge {a}-{b}")
            edge_seen.add(key)
        return out

    # -- links, stars, subgraphs --------------------------------------------

    def link(self, v: str) -> frozenset[str]:
        self._require(v)
        return self._adj[v]

    def star(self, v: str) -> frozenset[str]:
        self._require(v)
        return self._adj[v] | {v}

    def link_of_set(self, S: Iterable[str]) -> frozenset[str]:
        """Intersection of links; the empty intersection is V."""
        out = self.vertex_set
        for s in S:
            out = out & self.link(s)
        return out

    def star_of_set(self, S: Iterable[str]) -> frozenset[str]:
        out = self.vertex_set
        for s in S:
            out = out & self.star(s)
        return out

    def complement(self) -> "LabeledGraph":
        edges = [
            (a, b)
            for i, a in enumerate(self.names)
            for b in self.names[i + 1 :]
            if not self.adjacent(a, b)
        ]
        return LabeledGraph([(n, self.orders[n]) for n in self.names], edges, check=False)

    def induced_subgraph(self, X: Iterable[str]) -> "LabeledGraph":
        X = set(X)
        for x in X:
            self._require(x)
        names = [n for n in self.names if n in X]
        edges = [e for e in self.sorted_edges() if e[0] in X and e[1] in X]
        return LabeledGraph([(n, self.orders[n]) for n in names], edges, check=False)

    def components(self, X: Iterable[str] | None = None, complement: bool = False) -> list[frozenset[str]]:
        """Connected components of <X> (or of <X> in the complement graph), ordered by least vertex."""
        X = set(self.names if X is None else X)
        comps = []
        for start in self.names:
            if start not in X or any(start in c for c in comps):
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in X:
                    if y in comp or y == x:
                        continue
                    if self.adjacent(x, y) != complement:
                        comp.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def components_minus_star(self, v: str) -> list[frozenset[str]]:
        """Connected components of Gamma minus the star of v."""
        return self.components(self.vertex_set - self.star(v))

    def is_complete(self, X: Iterable[str] | None = None) -> bool:
        X = list(self.names if X is None else X)
        return all(self.adjacent(a, b) for i, a in enumerate(X) for b in X[i + 1 :])

    def is_discrete(self, X: Iterable[str] | None = None) -> bool:
        X = list(self.names if X is None else X)
        return not any(self.adjacent(a, b) for i, a in enumerate(X) for b in X[i + 1 :])

    # -- domination ---------------------------------------------------------

    def dominates(self, x: str, y: str) -> bool:
        """x <= y, i.e. lk x is contained in the star of y."""
        return self.link(x) <= self.star(y)

    def dominates_strongly(self, x: str, y: str) -> bool:
        """x <=_s y, i.e. star(x) is contained in star(y)."""
        return self.star(x) <= self.star(y)

    def equivalence_class(self, x: str) -> frozenset[str]:
        return frozenset(y for y in self.names if self.dominates(x, y) and self.dominates(y, x))

    def strong_class(self, x: str) -> frozenset[str]:
        # x ~_s y read as x <=_s y and y <=_s x
        return frozenset(
            y for y in self.names if self.dominates_strongly(x, y) and self.dominates_strongly(y, x)
        )

    def gamma_v(self, v: str) -> frozenset[str]:
        return frozenset(x for x in self.names if self.dominates(v, x))

    def omega_v(self, v: str) -> frozenset[str]:
        return self.gamma_v(v) - self.link(v)

    # -- global structure ---------------------------------------------------

    def maximal_cliques(self) -> list[tuple[str, ...]]:
        g = nx.Graph()
        g.add_nodes_from(self.names)
        g.add_edges_from(self.sorted_edges())
        cliques = [tuple(self.sort(c)) for c in nx.find_cliques(g)]
        return sorted(cliques, key=lambda c: [self.index[v] for v in c])

    def labeled_automorphisms(self) -> list["GraphAutomorphism"]:
        """All label-preserving graph automorphisms, identity first."""
        names = self.names

        def signature(v):
            return (
                format_order(self.orders[v]),
                len(self._adj[v]),
                tuple(sorted(format_order(self.orders[u]) for u in self._adj[v])),
            )

        sig = {v: signature(v) for v in names}
        candidates = {v: [w for w in names if sig[w] == sig[v]] for v in names}
        results = []
        image: dict[str, str] = {}
        used: set[str] = set()

        def extend(i):
            if i == len(names):
                results.append(GraphAutomorphism(self, tuple(image[v] for v in names)))
                return
            v = names[i]
            for w in candidates[v]:
                if w in used:
                    continue
                ok = True
                for u in names[:i]:
                    if self.adjacent(u, v) != self.adjacent(image[u], w):
                        ok = False
                        break
                if not ok:
                    continue
                image[v] = w
                used.add(w)
                extend(i + 1)
                used.discard(w)
                del image[v]

        extend(0)
        return results


def _coerce_order(order):
    if order == INF or (isinstance(order, str) and order.lower() in ("inf", "infinity", "∞")):
        return INF
    if isinstance(order, bool):
        raise GraphError(f"bad vertex order {order!r}")
    if isinstance(order, int):
        return order
    if isinstance(order, str) and order.isdigit():
        return int(order)
    raise GraphError(f"bad vertex order {order!r}")


def validate(graph_or_doc) -> list[str]:
    """Empty list when valid, otherwise human-readable problems."""
    if isinstance(graph_or_doc, LabeledGraph):
        return graph_or_doc.problems()
    try:
        verts = [(v["name"], v["order"]) for v in graph_or_doc["vertices"]]
        edges = [tuple(e) for e in graph_or_doc.get("edges", [])]
        g = LabeledGraph(verts, edges, check=False)
    except (KeyError, TypeError, GraphError) as exc:
        return [str(exc)]
    return g.problems()


def join(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Disjoint union plus every edge between the two vertex sets."""
    clash = set(g1.names) & set(g2.names)
    if clash:
        raise GraphError(f"join needs disjoint vertex names, shared: {sorted(clash)}")
    verts = [(n, g1.orders[n]) for n in g1.names] + [(n, g2.orders[n]) for n in g2.names]
    edges = g1.sorted_edges() + g2.sorted_edges() + [(a, b) for a in g1.names for b in g2.names]
    return LabeledGraph(verts, edges, check=False)


@dataclass(frozen=True)
class GraphAutomorphism:
    graph: LabeledGraph
    images: tuple[str, ...]

    def __call__(self, v: str) -> str:
        return self.images[self.graph.index[v]]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(zip(self.graph.names, self.images))

    def is_identity(self) -> bool:
        return self.images == self.graph.names

    def compose(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        """self after other."""
        return GraphAutomorphism(self.graph, tuple(self(other(v)) for v in self.graph.names))

    def inverse(self) -> "GraphAutomorphism":
        inv = {w: v for v, w in zip(self.graph.names, self.images)}
        return GraphAutomorphism(self.graph, tuple(inv[v] for v in self.graph.names))

    def is_valid(self) -> bool:
        g = self.graph
        m = self.mapping
        if sorted(m.values()) != sorted(g.names):
            return False
        return all(g.orders[m[v]] == g.orders[v] for v in g.names) and all(
            g.adjacent(m[a], m[b]) == g.adjacent(a, b) for a in g.names for b in g.names if a != b
        )

    def __repr__(self):
        moved = [f"{v}->{w}" for v, w in zip(self.graph.names, self.images) if v != w]
        return "GraphAutomorphism(" + (", ".join(moved) if moved else "id") + ")"


def identity_graph_automorphism(graph: LabeledGraph) -> GraphAutomorphism:
    return GraphAutomorphism(graph, graph.names)
