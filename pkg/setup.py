"""Builds the optional compiled kernel backend.

The package is fully functional without it (pure-Python fallback selected at
import), so the extension is marked optional: a missing compiler degrades
performance, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ivhfss._ckernels",
                sources=["src/ivhfss/_ckernels.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
