"""Build script for the optional compiled search kernels.

The package is pure Python plus one Cython extension; when Cython (or a
C compiler) is unavailable the extension is simply skipped and the
pure-Python kernels take over at import time.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PERMDEK_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "permdek._core._speedups",
                    ["src/permdek/_core/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
