"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--instances 200] [--seed 0] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from eograph import _kernels_py
from eograph.generate import random_graph

try:
    from eograph import _kernels as _compiled
except ImportError:
    _compiled = None


def workloads(instances: int, seed: int):
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(6, 10)) for _ in range(instances)]
    csr = [g.csr for g in graphs]
    small = [random_graph(rng, rng.randint(3, 5)) for _ in range(instances)]
    pairs = [(small[i], small[(i + 1) % len(small)]) for i in range(len(small))]

    def search(k):
        for offsets, targets in csr:
            for root in range(len(offsets) - 1):
                k.lex_search(offsets, targets, root, True)
                k.lex_search(offsets, targets, root, False)

    def paths(k):
        for offsets, targets in csr:
            n = len(offsets) - 1
            for t in range(n):
                k.least_proper_path(offsets, targets, 0, t, False)
                k.least_proper_path(offsets, targets, 0, t, True)

    def maps(k):
        for g, h in pairs:
            k.edge_maps(len(g), g.adjacency, len(h), h.adjacency, 0, 0, False)

    return {"lex_search": search, "least_proper_path": paths, "edge_maps": maps}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {"python": _kernels_py}
    if _compiled is not None:
        backends["compiled"] = _compiled
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':<20}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for name, work in workloads(args.instances, args.seed).items():
        times = {b: min(timeit.repeat(lambda: work(k), number=1, repeat=args.repeat)) for b, k in backends.items()}
        speed = f"{times['python'] / times['compiled']:>9.1f}x" if "compiled" in times else ""
        print(f"{name:<20}" + "".join(f"{t * 1000:>10.1f}ms" for t in times.values()) + speed)


if __name__ == "__main__":
    main()
