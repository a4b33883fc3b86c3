import os

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# the package works without the extension; it then uses the Python kernels
if cythonize is not None and not os.environ.get("TERMSING_NO_EXT"):
    ext_modules = cythonize(
        ["src/termsing/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
