import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists("src/romandom/_kernels.pyx"):
    ext_modules = cythonize(
        [
            Extension(
                "romandom._kernels",
                ["src/romandom/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    # Pure-Python fallback in romandom._kernels_py is used at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
