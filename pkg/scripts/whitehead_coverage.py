"""Report which generators are realised as Whitehead automorphisms on a few graphs."""
import argparse
from dataclasses import dataclass

from graphprod import catalog
from graphprod.generators import check_generators_in_whitehead
from graphprod.labeled_graph import INF, LabeledGraph


@dataclass
class Config:
    graph: str | None = None
    verbose: bool = False


DEFAULT = {
    "triangle with tail": catalog.triangle_with_tail(),
    "3-path (2,4,inf)": catalog.path(3, [2, 4, INF]),
    "5-cycle inf": catalog.cycle(5),
}


def run(cfg: Config) -> bool:
    graphs = {cfg.graph: LabeledGraph.load(cfg.graph)} if cfg.graph else DEFAULT
    ok = True
    for name, g in graphs.items():
        cov = check_generators_in_whitehead(g)
        ok &= cov.ok
        print(f"{name}: {'covered' if cov.ok else 'NOT covered'} ({len(cov.table)} generators)")
        if cfg.verbose or not cov.ok:
            for label, hit in cov.table:
                print(f"  {label}: {hit}")
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--graph", help="graph JSON file; defaults to three built-in graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    a = p.parse_args()
    raise SystemExit(0 if run(Config(a.graph, a.verbose)) else 1)


if __name__ == "__main__":
    main()
