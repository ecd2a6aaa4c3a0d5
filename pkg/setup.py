import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SELMERBOUND_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "selmerbound._kernels.fast",
                    ["src/selmerbound/_kernels/fast.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
