"""Endomorphisms given by vertex images, automorphisms with explicit inverses,
and the classification predicates used for Aut G."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .labeled_graph import INF, GraphAutomorphism, LabeledGraph
from .words import (
    GroupElement,
    cyclic_support,
    cyclically_reduce,
    element,
    identity,
    multiply,
    order_of,
    power,
    vertex,
)

VertexMap = dict  # vertex name -> GroupElement


class AutomorphismError(ValueError):
    """A vertex map that is not a well-defined automorphism."""


def apply_map(graph: LabeledGraph, images: Sequence[GroupElement], g: GroupElement) -> GroupElement:
    """Evaluate the endomorphism with the given vertex images (in vertex order) on g."""
    idx = graph.index
    out = identity(graph)
    for v, e in g.syllables:
        out = multiply(out, power(images[idx[v]], e))
    return out


def compose_images(graph, f: Sequence[GroupElement], g: Sequence[GroupElement]) -> tuple:
    """Images of f after g."""
    return tuple(apply_map(graph, f, x) for x in g)


@dataclass(frozen=True)
class WellDefinedReport:
    ok: bool
    witness: str = ""

    def __bool__(self):
        return self.ok


def is_well_defined(graph: LabeledGraph, images: Mapping[str, GroupElement]) -> WellDefinedReport:
    """Adjacent vertices must map to commuting elements and orders must be preserved."""
    missing = [v for v in graph.names if v not in images]
    if missing:
        return WellDefinedReport(False, f"no image for {missing[0]}")
    for v in graph.names:
        o = order_of(images[v])
        if o != graph.orders[v]:
            return WellDefinedReport(
                False, f"order of image of {v} is {'inf' if o == INF else o}, expected "
                f"{'inf' if graph.orders[v] == INF else graph.orders[v]}"
            )
    for a, b in graph.sorted_edges():
        x, y = images[a], images[b]
        if multiply(x, y) != multiply(y, x):
            return WellDefinedReport(False, f"images of adjacent {a},{b} do not commute")
    return WellDefinedReport(True)


@dataclass(frozen=True, eq=False)
class Automorphism:
    graph: LabeledGraph
    images: tuple[GroupElement, ...]
    inverse_images: tuple[GroupElement, ...]
    trace: tuple = field(default=())

    @classmethod
    def build(cls, graph, images: Mapping[str, GroupElement], inverse: Mapping[str, GroupElement],
              trace=(), check: bool = True) -> "Automorphism":
        fwd = tuple(images.get(v, vertex(graph, v)) for v in graph.names)
        bwd = tuple(inverse.get(v, vertex(graph, v)) for v in graph.names)
        auto = cls(graph, fwd, bwd, tuple(trace))
        if check:
            for name, side in (("map", auto.image_map()), ("inverse", auto.inverse().image_map())):
                rep = is_well_defined(graph, side)
                if not rep:
                    raise AutomorphismError(f"{name} is not well-defined: {rep.witness}")
            for v in graph.names:
                x = vertex(graph, v)
                if auto(auto.inverse()(x)) != x or auto.inverse()(auto(x)) != x:
                    raise AutomorphismError(f"inverse does not undo the map at {v}")
        return auto

    def __call__(self, g: GroupElement) -> GroupElement:
        return apply_map(self.graph, self.images, g)

    def image(self, v: str) -> GroupElement:
        return self.images[self.graph.index[v]]

    def image_map(self) -> dict[str, GroupElement]:
        return dict(zip(self.graph.names, self.images))

    @property
    def key(self) -> tuple:
        return tuple(g.syllables for g in self.images)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.graph == other.graph and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        moved = [f"{v}->{g}" for v, g in zip(self.graph.names, self.images) if g.syllables != ((v, 1),)]
        return "Automorphism(" + (", ".join(moved) if moved else "id") + ")"

    def is_identity(self) -> bool:
        return all(g.syllables == ((v, 1),) for v, g in zip(self.graph.names, self.images))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        fwd = compose_images(self.graph, self.images, other.images)
        bwd = compose_images(self.graph, other.inverse_images, self.inverse_images)
        return Automorphism(self.graph, fwd, bwd, self.trace + other.trace)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.graph, self.inverse_images, self.images, ())

    def power(self, n: int) -> "Automorphism":
        base = self if n >= 0 else self.inverse()
        out = identity_automorphism(self.graph)
        for _ in range(abs(n)):
            out = out.compose(base)
        return out

    # -- JSON -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "images": {v: str(g) for v, g in zip(self.graph.names, self.images)},
            "inverse": {v: str(g) for v, g in zip(self.graph.names, self.inverse_images)},
        }

    @classmethod
    def from_dict(cls, graph: LabeledGraph, data: Mapping, check: bool = True) -> "Automorphism":
        try:
            images = {v: element(graph, str(t)) for v, t in data["images"].items()}
            inverse = {v: element(graph, str(t)) for v, t in data["inverse"].items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise AutomorphismError(f"bad automorphism document: {exc}") from exc
        for v in list(images) + list(inverse):
            graph._require(v)
        return cls.build(graph, images, inverse, check=check)

    @classmethod
    def from_json(cls, graph: LabeledGraph, text: str, check: bool = True) -> "Automorphism":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise AutomorphismError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(graph, data, check=check)


def identity_automorphism(graph: LabeledGraph) -> Automorphism:
    ids = tuple(vertex(graph, v) for v in graph.names)
    return Automorphism(graph, ids, ids)


def apply(auto: Automorphism, g: GroupElement) -> GroupElement:
    return auto(g)


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    return f.compose(g)


def inverse(auto: Automorphism) -> Automorphism:
    return auto.inverse()


def equal(f: Automorphism, g: Automorphism) -> bool:
    return f == g


def inner_automorphism(graph: LabeledGraph, w: GroupElement) -> Automorphism:
    """z -> w z w^-1."""
    fwd = tuple(vertex(graph, v).conjugate_by(w) for v in graph.names)
    winv = w.inverse()
    bwd = tuple(vertex(graph, v).conjugate_by(winv) for v in graph.names)
    return Automorphism(graph, fwd, bwd)


# -- predicates ------------------------------------------------------------


def conjugating_set(auto: Automorphism) -> frozenset[str]:
    """Vertices v whose image is a conjugate of v."""
    out = set()
    for v, g in zip(auto.graph.names, auto.images):
        _, u = cyclically_reduce(g)
        if u.syllables == ((v, 1),):
            out.add(v)
    return frozenset(out)


def is_conjugating(auto: Automorphism) -> bool:
    return conjugating_set(auto) == auto.graph.vertex_set


def _complement_connected(graph: LabeledGraph, S) -> bool:
    return len(graph.components(S, complement=True)) == 1


def simple_set(auto: Automorphism) -> frozenset[str]:
    """Vertices v with v in csupp auto(v) and <csupp auto(v)> connected in the complement."""
    graph = auto.graph
    out = set()
    for v, g in zip(graph.names, auto.images):
        cs = cyclic_support(g)
        if v in cs and _complement_connected(graph, cs):
            out.add(v)
    return frozenset(out)


def is_simple(auto: Automorphism) -> bool:
    return simple_set(auto) == auto.graph.vertex_set


def quasi_simple_failures(auto: Automorphism) -> list[str]:
    graph = auto.graph
    bad = []
    for v, g in zip(graph.names, auto.images):
        cs = cyclic_support(g)
        if not (_complement_connected(graph, cs) and cs <= graph.gamma_v(v)):
            bad.append(v)
    return bad


def is_quasi_simple(auto: Automorphism) -> bool:
    return not quasi_simple_failures(auto)


def induced_graph_automorphism(auto: Automorphism) -> GraphAutomorphism:
    """A labeled graph automorphism gamma with gamma(v) in csupp auto(v) for every v."""
    graph = auto.graph
    csupps = [cyclic_support(g) for g in auto.images]
    for gamma in graph.labeled_automorphisms():
        if all(w in cs for w, cs in zip(gamma.images, csupps)):
            return gamma
    raise AssertionError(f"no graph automorphism is induced by {auto}; is it really an automorphism?")


# -- bounded search ---------------------------------------------------------


def decompose_over_generators(auto: Automorphism, gens: Sequence[Automorphism], max_depth: int = 8):
    """Indices i_1..i_k with gens[i_1] o ... o gens[i_k] == auto, or None.

    Meet-in-the-middle over vertex-image tuples; total word length <= max_depth.
    """
    graph = auto.graph
    ident = identity_automorphism(graph)
    if auto == ident:
        return []
    fwd_imgs = [g.images for g in gens]
    bwd_imgs = [g.inverse_images for g in gens]
    fwd = {ident.key: []}
    bwd = {auto.key: []}
    fwd_frontier = deque([(ident.images, [])])
    bwd_frontier = deque([(auto.images, [])])
    depth_f = depth_b = 0
    while depth_f + depth_b < max_depth and (fwd_frontier or bwd_frontier):
        grow_forward = len(fwd_frontier) <= len(bwd_frontier) if bwd_frontier else True
        if not fwd_frontier:
            grow_forward = False
        nxt = deque()
        if grow_forward:
            for imgs, path in fwd_frontier:
                for i, g in enumerate(fwd_imgs):
                    new = compose_images(graph, imgs, g)
                    key = tuple(x.syllables for x in new)
                    if key in fwd:
                        continue
                    newpath = path + [i]
                    if key in bwd:
                        return _checked(auto, gens, newpath + bwd[key])
                    fwd[key] = newpath
                    nxt.append((new, newpath))
            fwd_frontier = nxt
            depth_f += 1
        else:
            for imgs, path in bwd_frontier:
                for i, g in enumerate(bwd_imgs):
                    new = compose_images(graph, imgs, g)
                    key = tuple(x.syllables for x in new)
                    if key in bwd:
                        continue
                    newpath = [i] + path
                    if key in fwd:
                        return _checked(auto, gens, fwd[key] + newpath)
                    bwd[key] = newpath
                    nxt.append((new, newpath))
            bwd_frontier = nxt
            depth_b += 1
    return None


def _checked(auto, gens, path):
    out = identity_automorphism(auto.graph)
    for i in path:
        out = out.compose(gens[i])
    if out != auto:
        raise AssertionError("decomposition does not reproduce the target")
    return path


def check_report(auto: Automorphism) -> dict:
    """Everything the `check` command prints about a vertex map."""
    graph = auto.graph
    rep = is_well_defined(graph, auto.image_map())
    out = {"well_defined": rep.ok, "witness": rep.witness}
    if not rep.ok:
        return out
    out["conjugating_set"] = graph.sort(conjugating_set(auto))
    out["simple_set"] = graph.sort(simple_set(auto))
    out["quasi_simple"] = is_quasi_simple(auto)
    try:
        gamma = induced_graph_automorphism(auto)
        out["induced_graph_automorphism"] = gamma.mapping
    except AssertionError:
        out["induced_graph_automorphism"] = None
    return out


__all__ = [
    "Automorphism",
    "AutomorphismError",
    "VertexMap",
    "WellDefinedReport",
    "apply",
    "apply_map",
    "check_report",
    "compose",
    "compose_images",
    "conjugating_set",
    "decompose_over_generators",
    "equal",
    "identity_automorphism",
    "induced_graph_automorphism",
    "inner_automorphism",
    "inverse",
    "is_conjugating",
    "is_quasi_simple",
    "is_simple",
    "is_well_defined",
    "quasi_simple_failures",
    "simple_set",
]
