"""Build the optional compiled enumeration kernel.

The package works without it (a NumPy fallback is selected at import time),
but the compiled kernel is what makes exact alpha computation fast near the
default enumeration limit.
"""

from setuptools import Extension, setup

import numpy

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mixkit._kernels",
                ["src/mixkit/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
