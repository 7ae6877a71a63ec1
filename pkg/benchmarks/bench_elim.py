#!/usr/bin/env python3
"""Benchmark: pure-Python vs compiled integer row reduction.

Times the elimination core on random dense matrices and on the
structured sparse systems the kernel computation actually produces
(edge-constraint matrices of the builtin graphs), then times the full
equivariant pipeline under each backend.

Run from the repository root after building the extension:

    python setup.py build_ext --inplace
    python benchmarks/bench_elim.py
"""

import copy
import random
import statistics
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gkmcalc._elim_py import reduce_int_rows as py_reduce

try:
    from gkmcalc._elim_cy import reduce_int_rows as cy_reduce
except ImportError:
    cy_reduce = None


def time_one(fn, rows, ncols, repeats=5):
    times = []
    for _ in range(repeats):
        work = copy.deepcopy(rows)
        t0 = time.perf_counter()
        fn(work, ncols)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def dense_case(rng, nrows, ncols, scale):
    return [[rng.randint(-scale, scale) for _ in range(ncols)] for _ in range(nrows)]


def sparse_case(rng, nrows, ncols, nonzeros):
    rows = []
    for _ in range(nrows):
        row = [0] * ncols
        for j in rng.sample(range(ncols), nonzeros):
            row[j] = rng.randint(-3, 3) or 1
        rows.append(row)
    return rows


def constraint_case(graph_name, degree):
    from gkmcalc import examples
    from gkmcalc.gkmcore import _constraint_rows, _layout
    from gkmcalc.exactlin import _scaled_int_rows

    graph = {
        "simplex3": lambda: examples.builtin_simplex(3),
        "simplex4": lambda: examples.builtin_simplex(4),
        "stiefel": examples.builtin_stiefel,
    }[graph_name]()
    blocks, total = _layout(graph, degree)
    rows = _constraint_rows(graph, degree, blocks, total)
    return _scaled_int_rows(rows), total


def main():
    rng = random.Random(20260808)
    cases = [
        ("dense 60x60 |a|<=9", *(lambda m: (m, 60))(dense_case(rng, 60, 60, 9))),
        ("dense 120x160 |a|<=5", *(lambda m: (m, 160))(dense_case(rng, 120, 160, 5))),
        ("sparse 400x800, 3/row", *(lambda m: (m, 800))(sparse_case(rng, 400, 800, 3))),
        ("simplex4 constraints, degree 20", *constraint_case("simplex4", 20)),
        ("simplex3 constraints, degree 20", *constraint_case("simplex3", 20)),
        ("stiefel constraints, degree 20", *constraint_case("stiefel", 20)),
    ]
    print(f"{'case':<34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, rows, ncols in cases:
        t_py, _ = time_one(py_reduce, rows, ncols)
        if cy_reduce is None:
            print(f"{name:<34} {t_py * 1e3:9.2f}ms {'absent':>10}")
            continue
        t_cy, _ = time_one(cy_reduce, rows, ncols)
        print(
            f"{name:<34} {t_py * 1e3:9.2f}ms {t_cy * 1e3:9.2f}ms {t_py / t_cy:7.2f}x"
        )

    print("\nfull pipeline (equivariant dims of simplex(4), cutoff 20):")
    script = (
        "import time\n"
        "from gkmcalc.examples import builtin_simplex\n"
        "from gkmcalc.gkmcore import equivariant_dims\n"
        "import gkmcalc\n"
        "t0 = time.perf_counter()\n"
        "equivariant_dims(builtin_simplex(4), 20)\n"
        "print(f'{gkmcalc.ACTIVE_BACKEND}: {time.perf_counter() - t0:.2f}s')\n"
    )
    for backend in ("python", "compiled"):
        proc = subprocess.run(
            [sys.executable, "-c", script],
            capture_output=True,
            text=True,
            env={**__import__("os").environ, "GKM_ELIM_BACKEND": backend},
        )
        sys.stdout.write(proc.stdout if proc.returncode == 0 else proc.stderr)


if __name__ == "__main__":
    main()
