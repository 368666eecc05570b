"""Build script: compiles the optional Cython Jacobi kernel.

If Cython or a C compiler is unavailable the package still works; the
kernel dispatcher falls back to the numpy implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/gcdgraph/_kernels/_jacobi.pyx",
        compiler_directives={"language_level": "3"},
    )
    include_dirs = [numpy.get_include()]
    for ext in ext_modules:
        ext.include_dirs = include_dirs
        ext.define_macros = [("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")]
except ImportError:
    pass

setup(ext_modules=ext_modules)
