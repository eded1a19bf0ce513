import os

from setuptools import setup

# The compiled kernel module is optional: a plain-python fallback ships in
# dgla/_kernels.py and is selected at import time if the extension is absent.
ext_modules = []
if os.environ.get("DGLA_NO_EXT") != "1" and os.path.exists("src/dgla/_speedups.pyx"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("dgla._speedups", ["src/dgla/_speedups.pyx"], optional=True)],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
