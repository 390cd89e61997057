"""Command-line interface: `graphprod <command> --graph G.json ...`.

Exit codes: 0 success, 1 bad input, 2 nothing found within the search bound.
Set GRAPHPROD_LOG (e.g. DEBUG, INFO) to control log verbosity on stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import dataclass

from .automorphisms import Automorphism, check_report, decompose_over_generators
from .centralizer import basic_form, centralizer, rank, root
from .generators import (
    Generator,
    check_generators_in_whitehead,
    generating_set,
    star_generating_set,
    subgroup_one_set,
    whitehead_generators,
    with_inverses,
)
from .labeled_graph import LabeledGraph
from .oracle import enumerate_ball
from .words import cyclically_reduce, element

log = logging.getLogger("graphprod")

EXIT_OK, EXIT_ERROR, EXIT_NOT_FOUND = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    graph_path: str
    output_format: str = "text"
    depth: int = 8
    radius: int = 4
    seed: int = 0

    def __post_init__(self):
        if self.depth < 1 or self.radius < 1:
            raise ValueError("--depth and --radius must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("--format must be text or json")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


class _Result:
    def __init__(self, data, text: str, code: int = EXIT_OK):
        self.data, self.text, self.code = data, text, code


def _load_auto(graph: LabeledGraph, path: str) -> Automorphism:
    with open(path) as fh:
        return Automorphism.from_json(graph, fh.read())


def _generator_family(graph, which: str) -> list[Generator]:
    return {
        "all": generating_set,
        "star": star_generating_set,
        "one": subgroup_one_set,
        "whitehead": whitehead_generators,
    }[which](graph)


def cmd_normalize(graph, cfg, args) -> _Result:
    g = element(graph, args.word)
    return _Result({"word": str(g)}, str(g))


def cmd_centralizer(graph, cfg, args) -> _Result:
    g = element(graph, args.word)
    pres = centralizer(g)
    if pres.whole_group:
        return _Result({"whole_group": True}, "C(1) = G")
    data = {
        "whole_group": False,
        "conjugator": str(pres.conjugator),
        "cyclic_factors": [str(f) for f in pres.cyclic_factors],
        "link": graph.sort(pres.link_vertices),
        "generators": [str(h) for h in pres.generators()],
    }
    bf = basic_form(cyclically_reduce(g)[1])
    data["basic_form"] = [{"root": str(r), "exponent": m} for r, m in bf.factors]
    inner = [f"<{f}>" for f in data["cyclic_factors"]]
    if data["link"]:
        inner.append("<" + ", ".join(data["link"]) + ">")
    text = (
        f"C({g}) = w ({' x '.join(inner)}) w^-1 with w = {pres.conjugator}\n"
        f"basic form: {' '.join(f'({r})^{m}' for r, m in bf.factors)}"
    )
    return _Result(data, text)


def cmd_rank(graph, cfg, args) -> _Result:
    g = element(graph, args.word)
    data = {"word": str(g), "rank": rank(g)}
    if g.syllables:
        r = root(g)
        data.update(root=str(r.root), exponent=r.exponent, unique_root=r.unique)
    return _Result(data, f"rk({g}) = {data['rank']}")


def cmd_generators(graph, cfg, args) -> _Result:
    gens = _generator_family(graph, args.which)
    data = {"which": args.which, "count": len(gens), "generators": [g.to_dict() for g in gens]}
    lines = [f"{len(gens)} generators ({args.which})"] + [f"  {g.descriptor}" for g in gens]
    if args.which == "whitehead":
        cov = check_generators_in_whitehead(graph)
        data["covers_generating_set"] = cov.ok
        lines.append(f"generating set contained in Whitehead set: {cov.ok}")
    return _Result(data, "\n".join(lines))


def cmd_apply(graph, cfg, args) -> _Result:
    auto = _load_auto(graph, args.automorphism)
    out = auto(element(graph, args.word))
    return _Result({"word": str(out)}, str(out))


def cmd_check(graph, cfg, args) -> _Result:
    with open(args.automorphism) as fh:
        doc = json.load(fh)
    images = {v: element(graph, str(t)) for v, t in doc.get("images", {}).items()}
    for v in images:
        graph._require(v)
    inverse = {v: element(graph, str(t)) for v, t in doc.get("inverse", {}).items()}
    auto = Automorphism.build(graph, images, inverse, check=False)
    rep = check_report(auto)
    if rep["well_defined"] and "inverse" in doc:
        try:
            Automorphism.build(graph, images, inverse)
            rep["inverse_ok"] = True
        except ValueError as exc:
            rep["inverse_ok"] = False
            rep["witness"] = str(exc)
    text = "\n".join(f"{k}: {v}" for k, v in rep.items())
    return _Result(rep, text)


def cmd_decompose(graph, cfg, args) -> _Result:
    target = _load_auto(graph, args.automorphism)
    gens = _generator_family(graph, args.which)
    if args.use:
        wanted = set(args.use)
        gens = [g for g in gens if wanted & {str(d) for d in g.descriptors}]
        missing = wanted - {str(d) for g in gens for d in g.descriptors}
        if missing:
            raise ValueError(f"unknown generator label(s): {sorted(missing)}")
    gens = with_inverses(gens)
    path = decompose_over_generators(target, [g.automorphism for g in gens], cfg.depth)
    if path is None:
        return _Result({"found": False, "depth": cfg.depth}, f"not found <= depth {cfg.depth}", EXIT_NOT_FOUND)
    labels = [str(gens[i].descriptor) for i in path]
    text = " o ".join(labels) if labels else "id"
    return _Result({"found": True, "length": len(labels), "word": labels}, text)


def cmd_ball(graph, cfg, args) -> _Result:
    ball = enumerate_ball(graph, cfg.radius)
    sizes = [0] * (cfg.radius + 1)
    for d in ball.distance.values():
        sizes[d] += 1
    data = {"radius": cfg.radius, "size": len(ball), "spheres": sizes}
    text = f"|B({cfg.radius})| = {len(ball)}; spheres {sizes}"
    if args.sample:
        rng = random.Random(cfg.seed)
        pool = sorted(ball.elements, key=lambda g: (ball.distance[g], str(g)))
        picks = rng.sample(pool, min(args.sample, len(pool)))
        data["sample"] = [str(g) for g in picks]
        text += "\n" + "\n".join(f"  {g}" for g in data["sample"])
    return _Result(data, text)


COMMANDS = {
    "normalize": cmd_normalize,
    "centralizer": cmd_centralizer,
    "rank": cmd_rank,
    "generators": cmd_generators,
    "apply": cmd_apply,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "ball": cmd_ball,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="labeled graph JSON file")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--depth", type=int, default=8, help="search depth for decompose")
    common.add_argument("--radius", type=int, default=4, help="ball radius")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="graphprod", description="Graph products of cyclic groups.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("normalize", "centralizer", "rank"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("word", help='word such as "a b^-1 c^2"')
    sp = sub.add_parser("generators", parents=[common])
    sp.add_argument("which", nargs="?", choices=("all", "star", "one", "whitehead"), default="all")
    sp = sub.add_parser("apply", parents=[common])
    sp.add_argument("automorphism", help="automorphism JSON file")
    sp.add_argument("word")
    sp = sub.add_parser("check", parents=[common])
    sp.add_argument("automorphism")
    sp = sub.add_parser("decompose", parents=[common])
    sp.add_argument("automorphism")
    sp.add_argument("--which", choices=("all", "star", "one", "whitehead"), default="all")
    sp.add_argument("--use", action="append", help="restrict to generators with this label (repeatable)")
    sp = sub.add_parser("ball", parents=[common])
    sp.add_argument("--sample", type=int, default=0, help="print this many seeded random elements")
    return p


def _setup_logging():
    level = os.environ.get("GRAPHPROD_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(args.graph, args.format, args.depth, args.radius, args.seed)
        graph = LabeledGraph.load(cfg.graph_path)
        log.info("loaded graph with %d vertices", len(graph))
        res = COMMANDS[args.command](graph, cfg, args)
    except (ValueError, OSError) as exc:
        if args.format == "json":
            sys.stdout.write(dump_json({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(dump_json(res.data) if cfg.output_format == "json" else res.text + "\n")
    return res.code


if __name__ == "__main__":
    sys.exit(main())
