"""Builds the optional compiled kernel extension.

The package works without the extension (a pure-Python backend is picked
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "multisect._kernels._fast",
                sources=["src/multisect/_kernels/_fast.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
