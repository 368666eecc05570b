"""Independent brute-force verification of predicted spectra.

Two tiers: exact characteristic polynomials (Faddeev-LeVerrier over Python
integers) up to order 64, and a floating Jacobi eigensolver up to 4096.
The oracle never consults the closed-form path except to receive the
multiset it is asked to verify.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import BACKEND, jacobi_eigenvalues

EXACT_ORDER_CAP = 64
FLOAT_ORDER_CAP = 4096
FLOAT_TOLERANCE = 1e-6


def adjacency_matrix(graph):
    """Dense 0/1 adjacency indexed by canonical element order."""
    n = graph.ring.cardinality
    if n > FLOAT_ORDER_CAP:
        raise ValueError(f"adjacency matrix capped at order {FLOAT_ORDER_CAP}")
    idx = {e: i for i, e in enumerate(graph.ring.elements)}
    mat = np.zeros((n, n), dtype=np.int64)
    for e, i in idx.items():
        for s in graph.gen_set:
            mat[i, idx[graph.ring.add(e, s)]] = 1
    return mat


def charpoly_exact(mat):
    """det(xI - A) by Faddeev-LeVerrier; coefficients low to high, exact.

    The trace divisions are exact for integer matrices; arithmetic runs in
    Python big integers via an object-dtype matrix product.
    """
    n = mat.shape[0]
    if n > EXACT_ORDER_CAP:
        raise ValueError(f"exact characteristic polynomial capped at order {EXACT_ORDER_CAP}")
    a = np.array([[int(x) for x in row] for row in mat], dtype=object)
    ident = np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                     dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = ident
    c = 1
    for k in range(1, n + 1):
        am = a @ m
        c = -sum(am[i, i] for i in range(n))
        if c % k != 0:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        c //= k
        coeffs[n - k] = c
        m = am + c * ident
    return coeffs


def poly_from_roots(roots):
    """prod (x - r) with integer roots; coefficients low to high."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] -= c * r
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs


def eigs_float(mat, tol_factor=1e-10, max_sweeps=50):
    """Sorted eigenvalues of a symmetric integer matrix via cyclic Jacobi."""
    n = mat.shape[0]
    if n > FLOAT_ORDER_CAP:
        raise ValueError(f"floating eigensolver capped at order {FLOAT_ORDER_CAP}")
    return jacobi_eigenvalues(np.asarray(mat, dtype=np.float64),
                              tol_factor=tol_factor, max_sweeps=max_sweeps)


@dataclass
class VerificationReport:
    method: str            # "charpoly" or "jacobi"
    passed: bool
    max_deviation: float
    charpoly: list | None = None
    backend: str = BACKEND

    def to_dict(self):
        out = {"method": self.method, "pass": self.passed,
               "max_deviation": self.max_deviation, "backend": self.backend}
        if self.charpoly is not None:
            out["charpoly"] = self.charpoly
        return out


def verify_spectrum(graph, predicted=None):
    """Compare the predicted integer multiset against the adjacency matrix.

    `predicted` defaults to the closed-form spectrum; passing a perturbed
    list exercises the oracle's ability to fail.
    """
    if predicted is None:
        from .spectrum import full_spectrum
        predicted = full_spectrum(graph).eigenvalues_sorted()
    predicted = sorted(predicted)
    mat = adjacency_matrix(graph)
    n = mat.shape[0]
    if n <= EXACT_ORDER_CAP:
        actual = charpoly_exact(mat)
        claimed = poly_from_roots(predicted)
        deviation = max(abs(a - b) for a, b in zip(actual, claimed))
        return VerificationReport(method="charpoly", passed=deviation == 0,
                                  max_deviation=float(deviation), charpoly=actual)
    eigs = eigs_float(mat)
    deviation = float(max(abs(e - p) for e, p in zip(eigs, predicted)))
    return VerificationReport(method="jacobi",
                              passed=deviation < FLOAT_TOLERANCE,
                              max_deviation=deviation)
