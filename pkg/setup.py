"""Build script for the optional compiled polynomial kernel.

The package works without the extension: krullkit._kernels falls back to the
pure-Python implementation when the compiled module is absent or when
KRULLKIT_PURE_PYTHON=1 is set.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/krullkit/_kernels/_gfpoly.pyx"],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
