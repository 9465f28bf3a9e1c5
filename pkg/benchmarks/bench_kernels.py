"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-n 16]

Prints one row per (kernel, graph) with the best-of-N wall time of each
backend and the speedup.  Results are also checked for equality.
"""
import argparse
import random
import sys
import time

from isocover import grid, petersen, wall
from isocover.graph import Graph
from isocover.kernels import available_backends
from isocover.labels import Original


def random_connected(n, p, seed):
    rng = random.Random(seed)
    V = [Original(i) for i in range(n)]
    E = {(V[rng.randrange(i)], V[i]) for i in range(1, n)}
    E |= {(V[i], V[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph(V, E)


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=16, help="largest graph fed to the subset DPs")
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
    graphs = {
        "grid(3,3)": grid(3, 3),
        "petersen": petersen(),
        "grid(3,4)": grid(3, 4),
        "random(14,0.3)": random_connected(14, 0.3, 1),
        "grid(4,4)": grid(4, 4),
    }
    graphs = {k: G for k, G in graphs.items() if G.n <= args.max_n}
    names = sorted(backends)
    print(f"{'kernel':<22}{'graph':<16}" + "".join(f"{b + ' [s]':>14}" for b in names) + f"{'speedup':>10}")
    for kernel in ("treewidth_dp", "vertex_separation_dp", "treedepth_dp"):
        for gname, G in graphs.items():
            adj = G.bitmasks()
            row, results = [], []
            for b in names:
                t, res = best_of(lambda: getattr(backends[b], kernel)(adj), args.repeat)
                row.append(t)
                results.append(res)
            if any(r != results[0] for r in results):
                raise SystemExit(f"backends disagree on {kernel} / {gname}")
            speed = f"{row[names.index('python')] / row[0]:.0f}x" if len(row) > 1 else "-"
            print(f"{kernel:<22}{gname:<16}" + "".join(f"{t:>14.4f}" for t in row) + f"{speed:>10}")
    W = wall(12)
    indptr, indices = W.csr()
    sources = list(range(W.n))
    row = [best_of(lambda: backends[b].bfs_many(indptr, indices, sources), args.repeat)[0] for b in names]
    speed = f"{row[names.index('python')] / row[0]:.0f}x" if len(row) > 1 else "-"
    print(f"{'bfs_many':<22}{'wall(12)':<16}" + "".join(f"{t:>14.4f}" for t in row) + f"{speed:>10}")


if __name__ == "__main__":
    main()
