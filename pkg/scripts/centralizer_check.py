"""Check centralizer presentations against brute force inside a word-length ball."""
import argparse
import random
from dataclasses import dataclass

from graphprod import catalog
from graphprod.centralizer import centralizer
from graphprod.labeled_graph import INF
from graphprod.oracle import brute_centralizer, enumerate_ball, subgroup_ball
from graphprod.words import cr_part, length, random_element


@dataclass
class Config:
    radius: int = 4
    per_graph: int = 20
    max_len: int = 4
    seed: int = 0


GRAPHS = {
    "path(inf,2,3,inf,2)": catalog.path(5, [INF, 2, 3, INF, 2]),
    "cycle(inf,2,inf,3,4)": catalog.cycle(5, [INF, 2, INF, 3, 4]),
    "triangle+tail(2,3,inf,inf)": catalog.triangle_with_tail([2, 3, INF, INF]),
    "square(inf,2,inf,3)": catalog.square([INF, 2, INF, 3]),
    "star(2;inf,inf,3)": catalog.star(3, [2, INF, INF, 3]),
}


def run(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    failures = 0
    for name, g in GRAPHS.items():
        ball = enumerate_ball(g, cfg.radius)
        samples = set()
        for _ in range(100 * cfg.per_graph):
            if len(samples) >= cfg.per_graph:
                break
            u = cr_part(random_element(g, rng, rng.randint(1, cfg.max_len)))
            if 1 <= length(u) <= cfg.max_len:
                samples.add(u)
        bad = [u for u in samples
               if brute_centralizer(g, u, cfg.radius, ball) != subgroup_ball(centralizer(u).generators(), cfg.radius)]
        failures += len(bad)
        print(f"{name:<28} |B|={len(ball):5d} elements={len(samples):3d} failures={[str(u) for u in bad]}")
    return failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--per-graph", type=int, default=20)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    raise SystemExit(1 if run(Config(a.radius, a.per_graph, a.max_len, a.seed)) else 0)


if __name__ == "__main__":
    main()
