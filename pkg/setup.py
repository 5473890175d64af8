"""Build script for the optional compiled kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile degrades to a warning instead of aborting
the install.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the Cython kernel if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: compiled kernel build failed; "
            f"falling back to the pure-Python kernel ({exc})"
        )


def extensions():
    if os.environ.get("BELLSEP_SKIP_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available; building without compiled kernel")
        return []
    ext = Extension(
        "bellsep.kernels._ckernels",
        sources=["src/bellsep/kernels/_ckernels.pyx"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
