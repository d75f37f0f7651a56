"""Build script for the optional compiled kernel.

The package is fully functional without the extension: chebstab._kernels
falls back to a numpy implementation when the compiled module is absent.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

_BUILD_ERRORS = (CCompilerError, ExecError, PlatformError, OSError)


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except _BUILD_ERRORS as exc:
            warnings.warn(f"compiled kernel skipped ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except _BUILD_ERRORS as exc:
            warnings.warn(f"compiled kernel skipped ({exc}); using pure-Python backend")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "chebstab._kernels._native",
        ["src/chebstab/_kernels/_native.pyx"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
