"""Hot-kernel dispatch: compiled Cython Jacobi when built, numpy fallback
otherwise.  `BACKEND` records which one was picked at import time."""

try:
    from ._jacobi import jacobi_eigenvalues
    BACKEND = "cython"
except ImportError:  # extension not built; pure-numpy path
    from ._jacobi_py import jacobi_eigenvalues
    BACKEND = "python"

from ._jacobi_py import jacobi_eigenvalues as jacobi_eigenvalues_py

__all__ = ["jacobi_eigenvalues", "jacobi_eigenvalues_py", "BACKEND"]
