"""Build script for the optional compiled determinant kernel.

The extension is an accelerator, not a requirement: if Cython or a C
compiler is missing the build falls through and the package runs on the
pure-Python kernel. Set HANKEL_APPROX_NO_EXT=1 to skip the extension
build outright.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    """Build the accelerator if possible; warn and continue if not."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"WARNING: compiled kernel skipped ({exc}); using the pure-Python kernel")


ext_modules = []
if not os.environ.get("HANKEL_APPROX_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hankel_approx/_bareiss.pyx"], language_level=3
        )
    except ImportError:
        print("WARNING: Cython unavailable; using the pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
