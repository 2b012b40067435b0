"""Build script.

The search kernel in ``src/cfum/_kernel.py`` is plain Python written in
Cython "pure Python" mode.  When Cython is installed we compile it to a C
extension; otherwise the same file is imported as ordinary Python and
everything still works, just slower.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cfum/_kernel.py"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
