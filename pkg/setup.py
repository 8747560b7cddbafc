import os

from setuptools import Extension, setup

_PYX = os.path.join("src", "gring", "_kernel_c.pyx")

ext_modules = []
if os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gring._kernel_c", [_PYX])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The compiled kernel is optional; gring falls back to the
        # pure-Python twin at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
