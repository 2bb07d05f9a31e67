import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "setfix._fastkern",
                ["src/setfix/_fastkern.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: the pure-Python kernels are selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
