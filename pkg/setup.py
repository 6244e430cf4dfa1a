import os

from setuptools import Extension, setup

# The compiled census kernels are optional: without them the package falls
# back to the pure-Python backend in discdist._pykernels.
ext_modules = []
if not os.environ.get("DISCDIST_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "discdist._kernels",
                    ["src/discdist/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
