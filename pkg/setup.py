"""Build script: compiles the pairwise-energy kernel when a C toolchain is
available, otherwise installs pure Python (the package falls back at import).

Set FFSPHERE_PURE_PYTHON=1 to skip the compiled kernel on purpose.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python fallback instead of failing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled kernels disabled ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels disabled ({exc}); using pure-Python fallback")


ext_modules = []
cmdclass = {}
if os.environ.get("FFSPHERE_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("ffsphere._kernels", ["src/ffsphere/_kernels.pyx"])],
            language_level=3,
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError as exc:
        warnings.warn(f"Cython unavailable ({exc}); using pure-Python fallback")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
