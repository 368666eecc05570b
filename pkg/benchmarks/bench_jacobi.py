"""Benchmark the compiled Jacobi kernel against the pure-numpy fallback.

Usage: python3 benchmarks/bench_jacobi.py [sizes...]
Builds gcd-graph adjacency matrices over Z/n and times both eigensolver
backends on identical inputs, checking they agree.
"""

import sys
import time

import numpy as np

from gcdgraph import adjacency_matrix, build_gcd_graph, parse_ring_spec
from gcdgraph._kernels import BACKEND, jacobi_eigenvalues, jacobi_eigenvalues_py


def timed(fn, mat, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        work = mat.copy()
        start = time.perf_counter()
        result = fn(work)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv):
    sizes = [int(a) for a in argv] or [72, 100, 144, 210, 360]
    print(f"active backend at import: {BACKEND}")
    print(f"{'n':>5}  {'compiled (s)':>12}  {'fallback (s)':>12}  {'speedup':>8}  agree")
    for n in sizes:
        R = parse_ring_spec(f"Z/{n}")
        graph = build_gcd_graph(R, [R.one])
        mat = adjacency_matrix(graph).astype(np.float64)
        t_c, eig_c = timed(jacobi_eigenvalues, mat)
        t_p, eig_p = timed(jacobi_eigenvalues_py, mat)
        agree = np.allclose(eig_c, eig_p, atol=1e-8)
        print(f"{n:>5}  {t_c:>12.4f}  {t_p:>12.4f}  {t_p / t_c:>7.2f}x  {agree}")


if __name__ == "__main__":
    main(sys.argv[1:])
