"""Build the optional Cython speedups extension.

The package works without the extension (a numpy fallback is selected at
import time), so a missing compiler or Cython only costs speed. Set
GPDIM_SKIP_EXT=1 to skip the compiled build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the extension; the fallback covers it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"gpdim: skipping compiled speedups ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"gpdim: skipping {ext.name} ({exc})")


ext_modules = []
cmdclass = {}
if not os.environ.get("GPDIM_SKIP_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gpdim._speedups",
                    ["src/gpdim/_speedups.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError as exc:
        print(f"gpdim: building without compiled speedups ({exc})")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
