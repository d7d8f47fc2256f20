"""Build script: compiles the optional grid-scan extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernel is selected at import time), so a failed
extension build only costs speed, not correctness.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cycquart/_gridscan.pyx"],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
