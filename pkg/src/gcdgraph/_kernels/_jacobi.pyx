# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for symmetric float64 matrices."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt


def jacobi_eigenvalues(a, double tol_factor=1e-10, int max_sweeps=50):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] m = np.array(a, dtype=np.float64)
    cdef int n = m.shape[0]
    cdef double[:, :] A = m
    cdef int sweep, p, q, i
    cdef double off, small, apq, diff, theta, t, c, s, tmp_p, tmp_q, tol

    if n == 1:
        return np.array([A[0, 0]])
    tol = tol_factor * n
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += A[p, q] * A[p, q]
        off = sqrt(off)
        if off < tol:
            eig = np.asarray(m.diagonal()).copy()
            eig.sort()
            return eig
        small = 0.01 * off / n
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if fabs(apq) <= small:
                    continue
                diff = A[q, q] - A[p, p]
                if fabs(apq) < 1e-300 * fabs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    tmp_p = A[p, i]
                    tmp_q = A[q, i]
                    A[p, i] = c * tmp_p - s * tmp_q
                    A[q, i] = s * tmp_p + c * tmp_q
                for i in range(n):
                    tmp_p = A[i, p]
                    tmp_q = A[i, q]
                    A[i, p] = c * tmp_p - s * tmp_q
                    A[i, q] = s * tmp_p + c * tmp_q
    raise ArithmeticError(
        "Jacobi sweeps did not converge within %d sweeps" % max_sweeps)
