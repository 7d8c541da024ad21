"""Build script for the optional compiled kernel.

The package is pure Python; the extension in src/cliffk/_kernel.pyx is a
drop-in replacement for cliffk._kernel_py that the package picks up at import
time when present.  Set CLIFFK_NO_EXT=1 to skip building it (the pure kernels
are used as a fallback automatically).
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CLIFFK_NO_EXT") and os.path.exists("src/cliffk/_kernel.pyx"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "cliffk._kernel",
                    sources=["src/cliffk/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
