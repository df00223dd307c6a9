"""Build script: compiles the delay-race extension when a toolchain is available.

The package works without the extension (a numpy fallback is selected at
import time), so any failure here downgrades to a pure-Python install
instead of aborting.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
    import numpy as np

    ext = Extension(
        "ppufw._race._compiled",
        sources=["src/ppufw/_race/_compiled.pyx", "src/ppufw/_race/raceimpl.c"],
        include_dirs=[np.get_include(), "src/ppufw/_race"],
        extra_compile_args=["-O3", "-funroll-loops"],
    )
    ext_modules = cythonize([ext], language_level=3)
except Exception as exc:  # noqa: BLE001
    print(f"ppufw: skipping compiled extension ({exc}); "
          "the numpy fallback kernel will be used", file=sys.stderr)

setup(ext_modules=ext_modules)
