"""Build script.

The compiled canonical-labeling kernel is optional: when Cython and a C
compiler are available it is built, otherwise installation proceeds and the
package falls back to the pure-Python kernel at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Never fail the install because the extension did not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping compiled kernel ({exc}); "
                  f"pure-Python kernel will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: could not build {ext.name} ({exc}); "
                  f"pure-Python kernel will be used")


try:
    from setuptools import Extension
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("etskit._ckernel", ["src/etskit/_ckernel.pyx"])],
        language_level="3",
    )
except ImportError:  # pragma: no cover - toolchain dependent
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": _OptionalBuildExt})
