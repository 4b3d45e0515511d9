"""Build the optional compiled kernel; the package works without it.

If Cython (or a C compiler) is unavailable the extension is skipped and the
pure-Python kernel is used at runtime.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/weildescent/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
