"""Generator families of Aut W(Gamma, o) and the Whitehead automorphisms.

The four families are graph automorphism lifts, factor automorphisms,
dominated transvections and partial conjugations. `generating_set` assembles
them (the set G), `star_generating_set` / `subgroup_one_set` filter it, and
the Whitehead section builds type I / type II automorphisms (A, a).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

from .automorphisms import Automorphism, AutomorphismError, identity_automorphism, is_well_defined
from .labeled_graph import INF, GraphAutomorphism, GraphError, LabeledGraph, prime_of
from .words import invert, multiply, order_of, power, vertex


@dataclass(frozen=True)
class GeneratorDescriptor:
    kind: str
    params: tuple = ()

    def __getitem__(self, key):
        return dict(self.params)[key]

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        for k, v in self.params:
            out[k] = dict(v) if k == "mapping" else (list(v) if isinstance(v, tuple) else v)
        return out

    def __str__(self):
        p = dict(self.params)
        if self.kind == "graph_automorphism":
            moved = [f"{a}->{b}" for a, b in p["mapping"] if a != b]
            return "gamma(" + ", ".join(moved) + ")"
        if self.kind == "factor":
            return f"phi_{p['v']}^{p['m']}"
        if self.kind == "transvection":
            q = "" if p["q"] == 1 else f"^{p['q']}"
            return f"tau_{p['x']},{p['y']}{q}"
        if self.kind == "partial_conjugation":
            return f"sigma_{{{','.join(p['component'])}}},{p['v']}"
        if self.kind == "inner":
            return f"inner({p['w']})"
        if self.kind == "whitehead":
            return f"({{{', '.join(p['A'])}}}, {p['a']})"
        if self.kind == "inverse":
            return f"({p['of']})^-1"
        return self.kind


def descriptor(kind: str, **params) -> GeneratorDescriptor:
    return GeneratorDescriptor(kind, tuple(params.items()))


@dataclass(frozen=True)
class Generator:
    descriptor: GeneratorDescriptor
    automorphism: Automorphism
    aliases: tuple[GeneratorDescriptor, ...] = field(default=())

    @property
    def descriptors(self) -> tuple[GeneratorDescriptor, ...]:
        return (self.descriptor,) + self.aliases

    def to_dict(self) -> dict:
        out = self.descriptor.to_dict()
        if self.aliases:
            out["aliases"] = [d.to_dict() for d in self.aliases]
        return out


# -- the four families ------------------------------------------------------


def graph_automorphism_lift(gamma: GraphAutomorphism) -> Automorphism:
    graph = gamma.graph
    inv = gamma.inverse()
    return Automorphism(
        graph,
        tuple(vertex(graph, gamma(v)) for v in graph.names),
        tuple(vertex(graph, inv(v)) for v in graph.names),
    )


def _unit_inverse(m: int, o: int) -> int:
    return pow(m, -1, o)


def factor_automorphism(graph: LabeledGraph, v: str, m: int) -> Automorphism:
    """v -> v^m, other vertices fixed."""
    o = graph.order(v)
    if o == INF:
        if m != -1:
            raise AutomorphismError("an infinite-order vertex only admits the inversion")
        m_inv = -1
    else:
        if math.gcd(m, o) != 1:
            raise AutomorphismError(f"{m} is not a unit modulo {o}")
        m_inv = _unit_inverse(m, o)
    return Automorphism.build(graph, {v: vertex(graph, v, m)}, {v: vertex(graph, v, m_inv)})


def factor_automorphisms(graph: LabeledGraph) -> list[Generator]:
    out = []
    for v in graph.names:
        o = graph.orders[v]
        ms = [-1] if o == INF else [m for m in range(2, o) if math.gcd(m, o) == 1]
        for m in ms:
            out.append(Generator(descriptor("factor", v=v, m=m), factor_automorphism(graph, v, m)))
    return out


def predicted_transvection_power(graph: LabeledGraph, x: str, y: str):
    """Least q >= 1 with x -> x y^q well-defined, from the domination/order criteria; None if none."""
    ox, oy = graph.order(x), graph.order(y)
    if ox == INF:
        return 1 if graph.dominates(x, y) else None
    if oy == INF or not graph.dominates_strongly(x, y):
        return None
    p = prime_of(ox)
    if prime_of(oy) != p:
        return None
    j = round(math.log(ox, p))
    k = round(math.log(oy, p))
    return p ** max(0, k - j)


def transvection_map(graph: LabeledGraph, x: str, y: str, q: int) -> Automorphism:
    """x -> x y^q with inverse x -> x y^-q (not checked)."""
    xe = vertex(graph, x)
    return Automorphism.build(
        graph,
        {x: multiply(xe, vertex(graph, y, q))},
        {x: multiply(xe, vertex(graph, y, -q))},
        check=False,
    )


def transvection(graph: LabeledGraph, x: str, y: str):
    """(q, tau_{x,y}^q) for the least well-defined power, or None."""
    graph._require(x)
    graph._require(y)
    if x == y:
        raise GraphError("a transvection needs two distinct vertices")
    q = predicted_transvection_power(graph, x, y)
    if q is None:
        return None
    tau = transvection_map(graph, x, y, q)
    for side in (tau, tau.inverse()):
        rep = is_well_defined(graph, side.image_map())
        if not rep:
            raise AssertionError(f"predicted transvection tau_{x},{y}^{q} is not well-defined: {rep.witness}")
    return q, tau


def transvections(graph: LabeledGraph) -> list[Generator]:
    out = []
    for x in graph.names:
        for y in graph.names:
            if x == y:
                continue
            t = transvection(graph, x, y)
            if t is not None:
                q, tau = t
                out.append(Generator(descriptor("transvection", x=x, y=y, q=q), tau))
    return out


def partial_conjugation(graph: LabeledGraph, component: Iterable[str], v: str) -> Automorphism:
    """z -> v z v^-1 for z in the component, identity elsewhere."""
    ve = vertex(graph, v)
    vi = invert(ve)
    comp = list(component)
    return Automorphism.build(
        graph,
        {z: vertex(graph, z).conjugate_by(ve) for z in comp},
        {z: vertex(graph, z).conjugate_by(vi) for z in comp},
        check=False,
    )


def partial_conjugations(graph: LabeledGraph) -> list[Generator]:
    out = []
    for v in graph.names:
        for i, comp in enumerate(graph.components_minus_star(v)):
            desc = descriptor("partial_conjugation", v=v, index=i, component=tuple(graph.sort(comp)))
            out.append(Generator(desc, partial_conjugation(graph, comp, v)))
    return out


def graph_automorphism_generators(graph: LabeledGraph) -> list[Generator]:
    out = []
    for gamma in graph.labeled_automorphisms():
        if gamma.is_identity():
            continue
        desc = descriptor("graph_automorphism", mapping=tuple(gamma.mapping.items()))
        out.append(Generator(desc, graph_automorphism_lift(gamma)))
    return out


def _dedupe(entries: Iterable[Generator]) -> list[Generator]:
    order: list = []
    merged: dict = {}
    for g in entries:
        if g.automorphism.is_identity():
            continue
        k = g.automorphism.key
        if k in merged:
            first = merged[k]
            merged[k] = Generator(first.descriptor, first.automorphism, first.aliases + g.descriptors)
        else:
            merged[k] = g
            order.append(k)
    return [merged[k] for k in order]


def generating_set(graph: LabeledGraph) -> list[Generator]:
    """Graph automorphisms, factor automorphisms, well-defined transvections and
    partial conjugations, deduplicated by vertex images."""
    return _dedupe(
        graph_automorphism_generators(graph)
        + factor_automorphisms(graph)
        + transvections(graph)
        + partial_conjugations(graph)
    )


def _is_star_descriptor(graph: LabeledGraph, d: GeneratorDescriptor) -> bool:
    if d.kind == "transvection":
        return graph.adjacent(d["x"], d["y"])
    return True


def star_generating_set(graph: LabeledGraph) -> list[Generator]:
    """G*: drop transvections between non-adjacent vertices."""
    out = []
    for g in generating_set(graph):
        keep = [d for d in g.descriptors if _is_star_descriptor(graph, d)]
        if keep:
            out.append(Generator(keep[0], g.automorphism, tuple(keep[1:])))
    return out


def subgroup_one_set(graph: LabeledGraph) -> list[Generator]:
    """G^1: G* without partial conjugations."""
    out = []
    for g in star_generating_set(graph):
        keep = [d for d in g.descriptors if d.kind != "partial_conjugation"]
        if keep:
            out.append(Generator(keep[0], g.automorphism, tuple(keep[1:])))
    return out


def with_inverses(gens: list[Generator]) -> list[Generator]:
    """gens followed by the inverses that are not already present."""
    keys = {g.automorphism.key for g in gens}
    out = list(gens)
    for g in gens:
        inv = g.automorphism.inverse()
        if inv.key not in keys:
            keys.add(inv.key)
            out.append(Generator(descriptor("inverse", of=str(g.descriptor)), inv))
    return out


# -- Whitehead automorphisms -------------------------------------------------


@dataclass(frozen=True, order=True)
class WhiteheadLetter:
    """A letter of L: s^{+-1} for infinite s, v^q (1 <= q < o(v)) for finite v.

    Inside a set A, letters with exponent +1 / -1 mark x and x^-1; for finite
    vertices these are formal markers so that x and x^-1 stay distinct even
    when o(x) = 2.
    """

    vertex: str
    exp: int = 1

    def __str__(self):
        return self.vertex if self.exp == 1 else f"{self.vertex}^{self.exp}"

    def inverse_marker(self) -> "WhiteheadLetter":
        return WhiteheadLetter(self.vertex, -self.exp)


def letters_L(graph: LabeledGraph) -> list[WhiteheadLetter]:
    out = []
    for v in graph.names:
        o = graph.orders[v]
        if o == INF:
            out += [WhiteheadLetter(v, 1), WhiteheadLetter(v, -1)]
        else:
            out += [WhiteheadLetter(v, q) for q in range(1, o)]
    return out


def _multiplier_power(graph: LabeledGraph, a: WhiteheadLetter, x: str):
    """Least m with o(a^m) | o(x) and a^m != 1; None when there is none."""
    ae = vertex(graph, a.vertex, a.exp)
    oa = order_of(ae)
    ox = graph.orders[x]
    if oa == INF or ox == INF:
        return 1
    for m in range(1, oa):
        if ox % order_of(power(ae, m)) == 0:
            return m
    return None


def whitehead_options(graph: LabeledGraph, a: WhiteheadLetter) -> dict[str, tuple[str, ...]]:
    """Per vertex x != zeta, the image shapes allowed for (A, a):
    'fix' x, 'conj' a x a^-1, 'left' a^m x, 'right' x a^-m."""
    zeta = a.vertex
    a_finite = graph.orders[zeta] != INF
    out = {}
    for x in graph.names:
        if x == zeta:
            continue
        x_inf = graph.orders[x] == INF
        if x_inf:
            opts = ("fix", "conj", "left", "right")
        elif a_finite and x in graph.star(zeta) and _multiplier_power(graph, a, x) is not None:
            opts = ("fix", "conj", "left", "right")
        else:
            opts = ("fix", "conj")
        out[x] = opts
    return out


def _check_letter(graph: LabeledGraph, a: WhiteheadLetter):
    if a.vertex not in graph.index:
        raise GraphError(f"unknown vertex {a.vertex!r} in Whitehead letter")
    o = graph.orders[a.vertex]
    if (o == INF and a.exp not in (1, -1)) or (o != INF and not 1 <= a.exp < o):
        raise GraphError(f"{a} is not a letter of L")


def _options_from_A(graph: LabeledGraph, A: frozenset, a: WhiteheadLetter) -> dict[str, str]:
    zeta = a.vertex
    choice = {}
    for x in graph.names:
        if x == zeta:
            continue
        plus = WhiteheadLetter(x, 1) in A
        minus = WhiteheadLetter(x, -1) in A
        choice[x] = {(True, True): "conj", (True, False): "left", (False, True): "right"}.get((plus, minus), "fix")
    return choice


def A_from_options(graph: LabeledGraph, a: WhiteheadLetter, choice: dict[str, str]) -> frozenset:
    A = {WhiteheadLetter(a.vertex, 1 if graph.orders[a.vertex] != INF else a.exp)}
    for x, c in choice.items():
        if c in ("conj", "left"):
            A.add(WhiteheadLetter(x, 1))
        if c in ("conj", "right"):
            A.add(WhiteheadLetter(x, -1))
    return frozenset(A)


def whitehead_conditions(graph: LabeledGraph, a: WhiteheadLetter, choice: dict[str, str]) -> list[str]:
    """Failed sufficient conditions for (A, a) to be well-defined (empty = accepted)."""
    zeta = a.vertex
    zstar = graph.star(zeta)
    failures = []
    conj = {x for x, c in choice.items() if c == "conj"} - graph.link(zeta)
    for comp in graph.components_minus_star(zeta):
        inside = comp & conj
        if inside and inside != comp:
            failures.append(f"conjugated set cuts the component {graph.sort(comp)}")
    for x, c in choice.items():
        if c not in ("left", "right"):
            continue
        if not graph.link(x) <= zstar:
            failures.append(f"lk {x} not inside the star of {zeta}")
        if graph.orders[x] != INF:
            if not graph.star(x) <= zstar:
                failures.append(f"star of {x} not inside the star of {zeta}")
            m = _multiplier_power(graph, a, x)
            if m is None:
                failures.append(f"no power of {a} has order dividing o({x})")
    return failures


def _whitehead_images(graph, a: WhiteheadLetter, choice: dict[str, str], sign: int) -> dict:
    ae = vertex(graph, a.vertex, sign * a.exp)
    ai = invert(ae)
    images = {}
    for x, c in choice.items():
        xe = vertex(graph, x)
        if c == "fix":
            continue
        if c == "conj":
            images[x] = multiply(multiply(ae, xe), ai)
            continue
        m = _multiplier_power(graph, a, x)
        if c == "left":
            images[x] = multiply(power(ae, m), xe)
        else:
            images[x] = multiply(xe, power(ai, m))
    return images


def whitehead_type_II(graph: LabeledGraph, A: Iterable[WhiteheadLetter], a: WhiteheadLetter):
    """The automorphism (A, a) when it passes the sufficient conditions, else None."""
    _check_letter(graph, a)
    A = frozenset(A)
    for letter in A:
        if letter.vertex not in graph.index or letter.exp not in (1, -1):
            raise GraphError(f"{letter} is not a valid member of A")
    zeta = a.vertex
    if graph.orders[zeta] == INF:
        if a not in A or a.inverse_marker() in A:
            raise GraphError("A must contain a and not a^-1")
    elif WhiteheadLetter(zeta, 1) not in A:
        raise GraphError(f"A must contain {zeta}")
    choice = _options_from_A(graph, A, a)
    allowed = whitehead_options(graph, a)
    if any(choice[x] not in allowed[x] for x in choice):
        return None
    return _whitehead_from_choice(graph, a, choice)


def _whitehead_from_choice(graph, a: WhiteheadLetter, choice: dict[str, str]):
    if whitehead_conditions(graph, a, choice):
        return None
    auto = Automorphism.build(
        graph, _whitehead_images(graph, a, choice, 1), _whitehead_images(graph, a, choice, -1), check=False
    )
    for side in (auto, auto.inverse()):
        rep = is_well_defined(graph, side.image_map())
        if not rep:
            raise AssertionError(f"accepted Whitehead automorphism ({a}) is not well-defined: {rep.witness}")
    ident = identity_automorphism(graph)
    if auto.compose(auto.inverse()) != ident or auto.inverse().compose(auto) != ident:
        raise AssertionError(f"Whitehead automorphism ({a}) is not inverted by a -> a^-1")
    return auto


def whitehead_type_I(graph: LabeledGraph) -> list[Generator]:
    """Labeled graph automorphism lifts (identity included) and factor automorphisms."""
    out = []
    for gamma in graph.labeled_automorphisms():
        desc = descriptor("graph_automorphism", mapping=tuple(gamma.mapping.items()))
        out.append(Generator(desc, graph_automorphism_lift(gamma)))
    return out + factor_automorphisms(graph)


def enumerate_whitehead_type_II(graph: LabeledGraph):
    """Yield (A, a, automorphism) for every accepted type II Whitehead automorphism."""
    for a in letters_L(graph):
        opts = whitehead_options(graph, a)
        xs = list(opts)
        for combo in itertools.product(*(opts[x] for x in xs)):
            choice = dict(zip(xs, combo))
            auto = _whitehead_from_choice(graph, a, choice)
            if auto is not None:
                yield A_from_options(graph, a, choice), a, auto


def whitehead_generators(graph: LabeledGraph) -> list[Generator]:
    """Omega = Omega_1 followed by the distinct non-identity type II automorphisms."""
    out = whitehead_type_I(graph)
    seen = {g.automorphism.key for g in out}
    for A, a, auto in enumerate_whitehead_type_II(graph):
        if auto.key in seen:
            continue
        seen.add(auto.key)
        desc = descriptor("whitehead", A=tuple(str(x) for x in sorted(A)), a=str(a))
        out.append(Generator(desc, auto))
    return out


@dataclass(frozen=True)
class WhiteheadCoverage:
    ok: bool
    table: tuple  # (generator descriptor, witness descriptor or None)


def check_generators_in_whitehead(graph: LabeledGraph) -> WhiteheadCoverage:
    """Is every element of G realised by a type I or an accepted type II Whitehead automorphism?"""
    witnesses: dict = {}
    for g in whitehead_type_I(graph):
        witnesses.setdefault(g.automorphism.key, g.descriptor)
    for A, a, auto in enumerate_whitehead_type_II(graph):
        witnesses.setdefault(auto.key, descriptor("whitehead", A=tuple(str(x) for x in sorted(A)), a=str(a)))
    table = []
    ok = True
    for g in generating_set(graph):
        w = witnesses.get(g.automorphism.key)
        ok = ok and w is not None
        table.append((g.descriptor, w))
    return WhiteheadCoverage(ok, tuple(table))
