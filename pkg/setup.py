"""Build script: compiles the lattice-search kernel if Cython is available.

The package works without the extension (a numpy fallback is selected at
import time), so a failed build is tolerated.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("wellcheck._kernels", ["src/wellcheck/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
