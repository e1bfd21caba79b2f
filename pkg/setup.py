"""Build script: compiles the optional recurrence kernel extension.

The package is fully functional without the extension; ``pentacorner.recurrence``
falls back to the pure-Python kernel when the compiled module is absent.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"building the compiled kernel failed ({exc}); "
                          "falling back to the pure-Python recurrence")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "falling back to the pure-Python recurrence")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pentacorner._recurrence_c",
                   ["src/pentacorner/_recurrence_c.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
