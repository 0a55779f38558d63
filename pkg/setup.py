"""Build shim: compiles the optional fast kernel.

The package is fully functional without the extension (sidonlab.backend falls
back to the pure-Python twin), so a missing Cython or C compiler only costs
speed.  Set SIDONLAB_NO_EXT=1 to skip the build explicitly.
"""

import os

from setuptools import Extension, setup

PYX = "src/sidonlab/_kernel.pyx"

ext_modules = []
if not os.environ.get("SIDONLAB_NO_EXT") and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sidonlab._kernel", [PYX])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
