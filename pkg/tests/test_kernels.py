import random

import pytest

from isocover import kernels
from isocover.graph import grid

from oracles import pathwidth_oracle, random_graph, treedepth_oracle, treewidth_oracle

BACKENDS = kernels.available_backends()


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


def _graphs(count, max_n, seed):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), rng.random() * 0.6, connected=rng.random() < 0.7)
            for _ in range(count)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_kernels_match_brute_force(name):
    mod = BACKENDS[name]
    for G in _graphs(40, 7, seed=11):
        adj = G.bitmasks()
        assert mod.treewidth_dp(adj)[0] == treewidth_oracle(G)
        assert mod.vertex_separation_dp(adj)[0] == pathwidth_oracle(G)
        assert mod.treedepth_dp(adj)[0] == treedepth_oracle(G)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
def test_backends_agree_exactly():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for G in _graphs(30, 11, seed=5) + [grid(3, 3)]:
        adj = G.bitmasks()
        for fn in ("treewidth_dp", "vertex_separation_dp", "treedepth_dp"):
            assert getattr(py, fn)(adj) == getattr(cy, fn)(adj), fn
        indptr, indices = G.csr()
        src = list(range(G.n))
        assert [list(r) for r in py.bfs_many(indptr, indices, src)] == \
               [list(r) for r in cy.bfs_many(indptr, indices, src)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_empty_graph(name):
    mod = BACKENDS[name]
    assert mod.treewidth_dp([])[0] == -1
    assert mod.vertex_separation_dp([])[0] == -1
    assert mod.treedepth_dp([])[0] == 0


def test_env_var_forces_fallback():
    import os
    import subprocess
    import sys
    env = dict(os.environ, ISOCOVER_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import isocover; print(isocover.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs():
    import pathlib
    import subprocess
    import sys
    script = pathlib.Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--repeat", "1", "--max-n", "10"],
                         capture_output=True, text=True, check=True)
    assert "treewidth_dp" in out.stdout and "bfs_many" in out.stdout
