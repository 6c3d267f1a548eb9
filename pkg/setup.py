"""Build the optional compiled Groebner engine.

The package is pure Python plus one accelerator extension; if Cython or a C
compiler is missing the build quietly skips the extension and the kernel
selector falls back to the pure engine at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as e:
            print(f"skipping compiled kernel ({e}); using the pure-Python engine")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            print(f"skipping {ext.name} ({e}); using the pure-Python engine")


def extensions():
    if os.environ.get("ORBITCOMPAT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython not available; building without the compiled kernel")
        return []
    return cythonize(
        [
            Extension(
                "orbitcompat._kernel._speedups",
                ["src/orbitcompat/_kernel/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
