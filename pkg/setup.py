import os

from setuptools import Extension, setup

# The compiled kernels are optional: elemsym falls back to the pure-Python
# twins at import time.  Set ELEMSYM_PURE=1 to skip the extension build.
ext_modules = []
if os.environ.get("ELEMSYM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("elemsym._kernels", ["src/elemsym/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
