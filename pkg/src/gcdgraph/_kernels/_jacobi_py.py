"""Pure-numpy cyclic Jacobi eigensolver (fallback when the compiled
extension is unavailable).  Row/column rotation updates are vectorized."""

import math

import numpy as np


def jacobi_eigenvalues(a, tol_factor=1e-10, max_sweeps=50):
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    tol = tol_factor * n
    for _ in range(max_sweeps):
        # sum off-diagonal squares directly: subtracting the diagonal part
        # from the total cancels catastrophically near convergence
        sq = a * a
        np.fill_diagonal(sq, 0.0)
        off = math.sqrt(sq.sum())
        if off < tol:
            eig = a.diagonal().copy()
            eig.sort()
            return eig
        # skip rotations on entries that cannot matter this sweep
        small = 0.01 * off / n
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= small:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-300 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    raise ArithmeticError(f"Jacobi sweeps did not converge within {max_sweeps} sweeps")
