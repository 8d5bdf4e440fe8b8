"""Build script: compiles the optional accelerator extension when Cython and a
C toolchain are available, and degrades to the pure-NumPy fallback otherwise.

The package is fully functional without the extension; ``hbkern._hot``
selects the implementation at import time.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HBKERN_PURE", "0") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext = Extension(
            "hbkern._hot._core",
            sources=["src/hbkern/_hot/_core.pyx"],
            include_dirs=[np.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
