"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so any failure here degrades to a pure install instead of
aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gl2images/_core.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"warning: building without compiled core ({exc})")

setup(ext_modules=ext_modules)
